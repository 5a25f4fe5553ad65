from itertools import product

from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def all_words(alphabet: str, max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


def brute_border(w: str) -> int:
    return max((z for z in range(len(w)) if w[:z] == w[len(w) - z :]), default=0)


def brute_short_border(w: str) -> int:
    return max((z for z in range(len(w)) if 2 * z < len(w) and w[:z] == w[len(w) - z :]), default=0)


_CRITERIA = {}


def pytest_runtest_makereport(item, call):
    if item.module.__name__.endswith("test_acceptance") and item.name.startswith("test_criterion_"):
        if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
            number = int(item.name.split("_")[2])
            doc = (item.function.__doc__ or "").strip().splitlines()[0]
            _CRITERIA[number] = ("FAIL" if call.excinfo is not None else "PASS", doc)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, doc = _CRITERIA[number]
        terminalreporter.write_line(f"{status} criterion {number:2d}: {doc}")
