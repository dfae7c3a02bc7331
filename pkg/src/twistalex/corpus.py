"""Bundled example diagrams used by tests, the self-test suites, and the
documentation.

PD codes follow the package slot convention (incoming under-strand first,
then counterclockwise) and every entry carries explicit orientation
annotations.  ``expected_linking`` records, per deletable component, the
linking numbers of the surviving components with it, in ascending component
order; these are frozen from hand counts of the signed crossings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram, parse_pd


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pd_text: str
    mu: int
    crossings: int
    expected_linking: dict
    description: str


_ENTRIES = [
    CorpusEntry(
        name="unknot-kink",
        pd_text="""
            component 1 orientation +
            X[1,1,2,2]
        """,
        mu=1, crossings=1, expected_linking={},
        description="unknot with one positive kink",
    ),
    CorpusEntry(
        name="hopf",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            X[1,3,2,4] X[3,1,4,2]
        """,
        mu=2, crossings=2, expected_linking={2: [1], 1: [1]},
        description="positive Hopf link",
    ),
    CorpusEntry(
        name="hopf-negative",
        pd_text="""
            component 1 orientation +
            component 2 orientation -
            X[1,3,2,4] X[3,1,4,2]
        """,
        mu=2, crossings=2, expected_linking={2: [-1], 1: [-1]},
        description="Hopf link with the second component reversed",
    ),
    CorpusEntry(
        name="trefoil",
        pd_text="""
            component 1 orientation +
            X[1,2,3,4] X[2,5,6,3] X[5,1,4,6]
        """,
        mu=1, crossings=3, expected_linking={},
        description="right-handed trefoil (closed 2-strand positive braid)",
    ),
    CorpusEntry(
        name="torus-2-4",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            X[1,2,3,4] X[2,5,6,3] X[5,7,8,6] X[7,1,4,8]
        """,
        mu=2, crossings=4, expected_linking={2: [2], 1: [2]},
        description="(2,4) torus link",
    ),
    CorpusEntry(
        name="torus-2-6",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            X[1,2,3,4] X[2,5,6,3] X[5,7,8,6] X[7,9,10,8] X[9,11,12,10] X[11,1,4,12]
        """,
        mu=2, crossings=6, expected_linking={2: [3], 1: [3]},
        description="(2,6) torus link",
    ),
    CorpusEntry(
        name="torus-2-minus4",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            X[1,2,3,4] X[4,3,5,6] X[6,5,7,8] X[8,7,2,1]
        """,
        mu=2, crossings=4, expected_linking={2: [-2], 1: [-2]},
        description="(2,-4) torus link (negative crossings)",
    ),
    CorpusEntry(
        name="whitehead",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            X[1,2,3,4] X[2,5,6,7] X[7,8,9,3] X[8,6,5,10] X[10,1,4,9]
        """,
        mu=2, crossings=5, expected_linking={2: [0], 1: [0]},
        description="Whitehead link (linking number zero, both components unknots)",
    ),
    CorpusEntry(
        name="borromean",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            component 3 orientation +
            X[1,2,3,4] X[2,5,6,7] X[7,8,9,3] X[8,6,10,11] X[11,12,4,9] X[12,10,5,1]
        """,
        mu=3, crossings=6,
        expected_linking={3: [0, 0], 2: [0, 0], 1: [0, 0]},
        description="Borromean rings (pairwise unlinked)",
    ),
    CorpusEntry(
        name="split-trefoil-unknot",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            X[1,2,3,4] X[2,5,6,3] X[5,1,4,6]
            X[7,7,8,8]
        """,
        mu=2, crossings=4, expected_linking={2: [0], 1: [0]},
        description="split union of a trefoil and a kinked unknot",
    ),
    CorpusEntry(
        name="split-hopf-unknot",
        pd_text="""
            component 1 orientation +
            component 2 orientation +
            component 3 orientation +
            X[1,3,2,4] X[3,1,4,2]
            X[5,5,6,6]
        """,
        mu=3, crossings=3,
        expected_linking={3: [0, 0], 2: [1, 0], 1: [1, 0]},
        description="split union of a Hopf link and a kinked unknot",
    ),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def entries():
    return list(_ENTRIES)


def names():
    return [e.name for e in _ENTRIES]


def entry(name: str) -> CorpusEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"no corpus link named {name!r}; known: {', '.join(names())}") from None


def diagram(name: str) -> LinkDiagram:
    e = entry(name)
    return parse_pd(e.pd_text, name=e.name)


def multi_component_names():
    return [e.name for e in _ENTRIES if e.mu >= 2]


# frozen hand computations used as goldens by the self-test
CLASSICAL_GOLDENS = {
    "unknot-kink": "1",
    "trefoil": "t1^2 - t1 + 1",
    "hopf": "1",
}
