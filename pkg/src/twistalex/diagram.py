"""Oriented link diagrams from PD codes.

A PD file lists one ``component <i> orientation <+|->`` header per link
component followed by crossing tuples ``X[a,b,c,d]``:

  * slot ``a`` is the incoming under-strand edge and ``c`` the outgoing one;
    slots ``b`` and ``d`` follow counterclockwise, so the over-strand
    occupies ``b`` and ``d``;
  * edge labels are positive integers, each appearing exactly twice overall.

Orientations are never inferred from tuple order: the ``+`` annotation means
the component traverses its under-crossings in the a -> c direction, ``-``
reverses the component.  A crossing is positive when the over-strand crosses
the under-strand left to right as seen along the under-strand direction,
which for these slots means the over-strand runs d -> b.

Internally edges are merged into Wirtinger arcs: an arc is a maximal run of
edges not interrupted by an under-passage, so every arc ends exactly twice at
an under-strand slot and the number of arcs equals the number of crossings.
Components that never pass under anything have no Wirtinger break and are
rejected with a hint to add a kink.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateInputError, ParseError, ValidationError
from .freegroup import Presentation, Word

# slot indices within X[a,b,c,d]
_A, _B, _C, _D = 0, 1, 2, 3
_EXIT_SLOT = {_A: _C, _C: _A, _B: _D, _D: _B}

_CROSSING_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_COMPONENT_RE = re.compile(r"component\s+(\d+)\s+orientation\s+([+-])\s*$")


@dataclass(frozen=True)
class Arc:
    """A Wirtinger arc: (component, 1-based position along the component)."""
    component: int
    index: int
    edges: tuple

    @property
    def label(self) -> str:
        return f"x{self.component}_{self.index}"


@dataclass(frozen=True)
class Crossing:
    """One crossing with resolved arcs, components, and sign.

    ``pd`` keeps the source tuple; synthetic kinks added by component
    deletion carry ``pd=None``.
    """
    sign: int
    over_arc: int
    under_in_arc: int
    under_out_arc: int
    over_component: int
    under_component: int
    pd: Optional[tuple] = None


class LinkDiagram:
    """An oriented diagram resolved into components, arcs, and crossings."""

    def __init__(self, mu: int, arcs, crossings, name: str = ""):
        self.mu = mu
        self.arcs = tuple(arcs)
        self.crossings = tuple(crossings)
        self.name = name
        self._check()

    def _check(self):
        counts = {}
        for a in self.arcs:
            counts[a.component] = counts.get(a.component, 0) + 1
        if set(counts) != set(range(1, self.mu + 1)):
            raise ValidationError("every component must own at least one arc")
        if self.crossings and len(self.arcs) != len(self.crossings):
            raise ValidationError(
                f"arc/crossing bookkeeping broken: {len(self.arcs)} arcs vs "
                f"{len(self.crossings)} crossings")
        under_ends = {}
        for c in self.crossings:
            under_ends[c.under_in_arc] = under_ends.get(c.under_in_arc, 0) + 1
            under_ends[c.under_out_arc] = under_ends.get(c.under_out_arc, 0) + 1
        for i in range(len(self.arcs)):
            if self.crossings and under_ends.get(i, 0) != 2:
                raise ValidationError(
                    f"arc {self.arc_label(i)} must appear exactly twice as an "
                    f"under-strand endpoint")

    @property
    def ncrossings(self) -> int:
        return len(self.crossings)

    def arc_label(self, arc_id: int) -> str:
        return self.arcs[arc_id].label

    def arc_by_label(self, label: str) -> int:
        for i, a in enumerate(self.arcs):
            if a.label == label:
                return i
        raise KeyError(f"no arc labelled {label!r}")

    def component_arcs(self, component: int):
        return [i for i, a in enumerate(self.arcs) if a.component == component]

    def __repr__(self):
        return (f"<LinkDiagram {self.name or 'unnamed'}: {self.mu} components, "
                f"{len(self.crossings)} crossings>")


# ----------------------------------------------------------------------
# Parsing
# ----------------------------------------------------------------------

def parse_pd(text: str, name: str = "", source=None) -> LinkDiagram:
    """Parse PD text into a validated LinkDiagram."""
    crossings_pd: list = []
    orientations: dict = {}
    for lineno, raw in enumerate(text.splitlines() or [text], start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _COMPONENT_RE.match(line)
        if m:
            idx = int(m.group(1))
            if idx in orientations:
                raise ParseError(f"component {idx} declared twice", source, lineno)
            orientations[idx] = 1 if m.group(2) == "+" else -1
            continue
        consumed = 0
        for m in _CROSSING_RE.finditer(line):
            crossings_pd.append(tuple(int(g) for g in m.groups()))
            consumed += m.end() - m.start()
        leftover = _CROSSING_RE.sub("", line).strip()
        if leftover:
            raise ParseError(f"unrecognized input {leftover!r}", source, lineno)
    if not crossings_pd:
        raise ParseError("no crossings found (empty PD)", source)

    # every edge label appears exactly twice across all slots
    occurrences: dict = {}
    for ci, pd in enumerate(crossings_pd):
        for slot, edge in enumerate(pd):
            occurrences.setdefault(edge, []).append((ci, slot))
    bad = {e: len(o) for e, o in occurrences.items() if len(o) != 2}
    if bad:
        detail = ", ".join(f"edge {e} appears {k} times" for e, k in sorted(bad.items()))
        raise ParseError(f"inconsistent arc labels: {detail}", source)

    walks = _trace_components(crossings_pd, occurrences, source)
    walks.sort(key=lambda w: min(step[0] for step in w))
    mu = len(walks)

    if set(orientations) != set(range(1, mu + 1)):
        raise ParseError(
            f"diagram has {mu} components; need exactly one "
            f"'component <i> orientation <+|->' line for each of 1..{mu}", source)
    for comp, walk in enumerate(walks, start=1):
        if orientations[comp] < 0:
            walks[comp - 1] = _reverse_walk(walk)

    for comp, walk in enumerate(walks, start=1):
        if not any(slot_in in (_A, _C) for _, _, slot_in, _ in walk):
            raise ValidationError(
                f"component {comp} never passes under another strand; add a "
                f"kink (Reidemeister I) so it owns a Wirtinger arc")

    arcs, crossings = _assemble(crossings_pd, walks)
    return LinkDiagram(mu, arcs, crossings, name=name)


def _trace_components(crossings_pd, occurrences, source):
    """Walk each component; returns one step list per component.

    A step (edge, crossing, slot_in, slot_out) means: travel along ``edge``,
    then pass through ``crossing`` entering at ``slot_in``.  Under-passages
    must all run a -> c once the walk direction is settled; mixed directions
    mean the PD data is unorientable.
    """
    # occurrence -> next edge uses the crossing tuple
    used = set()
    walks = []
    for start_edge in sorted(occurrences):
        start_occ = min(occurrences[start_edge])
        if (start_edge, start_occ) in used:
            continue
        steps = []
        edge, occ = start_edge, start_occ
        while True:
            if (edge, occ) in used:
                raise ParseError("PD structure is not a disjoint union of cycles", source)
            used.add((edge, occ))
            ci, slot_in = occ
            slot_out = _EXIT_SLOT[slot_in]
            next_edge = crossings_pd[ci][slot_out]
            steps.append((edge, ci, slot_in, slot_out))
            # mark the exit occurrence and continue on the other one
            used.add((next_edge, (ci, slot_out)))
            other = [o for o in occurrences[next_edge] if o != (ci, slot_out)]
            if len(other) != 1:
                raise ParseError(
                    f"edge {next_edge} reused within one crossing in an "
                    f"unrealizable way", source)
            edge, occ = next_edge, other[0]
            if (edge, occ) == (start_edge, start_occ):
                break
        directions = {slot_in in (_A, _D) for _, _, slot_in, _ in steps
                      if slot_in in (_A, _C)}
        if len(directions) > 1:
            raise ParseError(
                "ambiguous orientation: a component passes under both in the "
                "a->c and the c->a sense", source)
        if directions == {False}:
            steps = _reverse_walk(steps)
        walks.append(steps)
    return walks


def _reverse_walk(steps):
    m = len(steps)
    return [(steps[(m - i) % m][0], steps[m - 1 - i][1],
             steps[m - 1 - i][3], steps[m - 1 - i][2]) for i in range(m)]


def _assemble(crossings_pd, walks):
    """Break walks into arcs at under-passages and resolve crossings."""
    arcs = []
    arc_of = {}  # (component, walk position) -> global arc id
    passage_under = {}  # crossing -> (component, forward, in_arc, out_arc)
    passage_over = {}  # crossing -> (component, forward, arc)
    pending = []  # (component, [segments]) with segment = list of walk positions

    for comp, walk in enumerate(walks, start=1):
        m = len(walk)
        under_positions = [i for i, (_, _, s, _) in enumerate(walk) if s in (_A, _C)]
        segments = []
        k = len(under_positions)
        for j in range(k):
            start = under_positions[j]
            end = under_positions[(j + 1) % k]
            positions = []
            p = (start + 1) % m
            while True:
                positions.append(p)
                if p == end:
                    break
                p = (p + 1) % m
            segments.append(positions)
        pending.append((comp, segments))

    for comp, segments in pending:
        for index, positions in enumerate(segments, start=1):
            edges = tuple(walks[comp - 1][p][0] for p in positions)
            arc_id = len(arcs)
            arcs.append(Arc(component=comp, index=index, edges=edges))
            for p in positions:
                arc_of[(comp, p)] = arc_id

    for comp, walk in enumerate(walks, start=1):
        m = len(walk)
        for pos, (edge, ci, slot_in, slot_out) in enumerate(walk):
            forward = slot_in in (_A, _D)
            this_arc = arc_of[(comp, pos)]
            next_arc = arc_of[(comp, (pos + 1) % m)]
            if slot_in in (_A, _C):
                passage_under[ci] = (comp, forward, this_arc, next_arc)
            else:
                assert this_arc == next_arc, "over-passage must not break an arc"
                passage_over[ci] = (comp, forward, this_arc)

    crossings = []
    for ci, pd in enumerate(crossings_pd):
        ucomp, ufwd, uin, uout = passage_under[ci]
        ocomp, ofwd, oarc = passage_over[ci]
        sign = 1 if ufwd == ofwd else -1
        crossings.append(Crossing(
            sign=sign, over_arc=oarc, under_in_arc=uin, under_out_arc=uout,
            over_component=ocomp, under_component=ucomp, pd=pd))
    return arcs, crossings


# ----------------------------------------------------------------------
# Wirtinger presentations
# ----------------------------------------------------------------------

def wirtinger(d: LinkDiagram, drop_crossing: Optional[int] = None) -> Presentation:
    """Wirtinger presentation: one generator per arc, one conjugation relator
    per crossing with exactly one redundant relator dropped.

    The relator of a crossing with sign ``s`` is ``o^s u_in o^-s u_out^-1``.
    By default the last crossing's relator is dropped; ``drop_crossing``
    overrides the choice.  A crossingless single-component diagram yields the
    one-generator presentation with no relators.
    """
    if not d.crossings:
        if d.mu == 1 and len(d.arcs) == 1:
            return Presentation(
                generators=(d.arc_label(0),), components=(1,), relators=(),
                nvars=1, wirtinger=True, relator_letters=(), relator_under=(),
                relator_crossings=(), dropped_crossing=None)
        raise ValidationError(
            "crossingless multi-component diagrams have no Wirtinger "
            "presentation; add a kink (Reidemeister I) to each crossingless "
            "component")
    if drop_crossing is None:
        drop_crossing = len(d.crossings) - 1
    if not 0 <= drop_crossing < len(d.crossings):
        raise ValidationError(f"drop_crossing {drop_crossing} out of range")

    generators = tuple(a.label for a in d.arcs)
    components = tuple(a.component for a in d.arcs)
    relators = []
    raw = []
    under = []
    origin = []
    for ci, c in enumerate(d.crossings):
        if ci == drop_crossing:
            continue
        s = c.sign
        letters = ((c.over_arc, s), (c.under_in_arc, 1),
                   (c.over_arc, -s), (c.under_out_arc, -1))
        relators.append(Word(letters))
        raw.append(letters)
        under.append(c.under_component)
        origin.append(ci)
    return Presentation(
        generators=generators, components=components, relators=tuple(relators),
        nvars=d.mu, wirtinger=True, relator_letters=tuple(raw),
        relator_under=tuple(under), relator_crossings=tuple(origin),
        dropped_crossing=drop_crossing)


# ----------------------------------------------------------------------
# Component deletion and linking numbers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentDeletion:
    """Result of deleting one component.

    ``arc_map`` sends every arc id of the original diagram to the id of the
    arc containing it after deletion (None for arcs of the deleted
    component), realizing the natural surjection on Wirtinger generators.
    ``kinked_components`` lists new components that received a synthetic kink
    because every one of their under-crossings was deleted.
    """
    diagram: LinkDiagram
    arc_map: dict
    component_map: dict
    deleted_arcs: tuple
    kinked_components: tuple


def delete_component(d: LinkDiagram, component: int) -> ComponentDeletion:
    """Delete one component: drop its crossings and merge arcs of the
    surviving components that were separated only by deleted crossings."""
    if d.mu < 2:
        raise DegenerateInputError("cannot delete the only component of a knot")
    if not 1 <= component <= d.mu:
        raise DegenerateInputError(f"component {component} out of range 1..{d.mu}")

    surviving_idx = [i for i, c in enumerate(d.crossings)
                     if c.over_component != component and c.under_component != component]
    surviving = [d.crossings[i] for i in surviving_idx]

    # union-find over surviving arcs; deleted crossings where a survivor went
    # under merge its in/out arcs
    parent = list(range(len(d.arcs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    removed_idx = set(range(len(d.crossings))) - set(surviving_idx)
    for i in sorted(removed_idx):
        c = d.crossings[i]
        if c.under_component != component:
            union(c.under_in_arc, c.under_out_arc)

    component_map = {i: (i if i < component else i - 1)
                     for i in range(1, d.mu + 1) if i != component}

    new_arcs: list = []
    class_to_new: dict = {}
    for old_comp in sorted(component_map):
        new_comp = component_map[old_comp]
        index = 0
        for arc_id in d.component_arcs(old_comp):
            root = find(arc_id)
            if root not in class_to_new:
                index += 1
                merged_edges = tuple(
                    e for other in d.component_arcs(old_comp)
                    if find(other) == root for e in d.arcs[other].edges)
                class_to_new[root] = len(new_arcs)
                new_arcs.append(Arc(component=new_comp, index=index,
                                    edges=merged_edges))

    arc_map: dict = {}
    deleted_arcs = []
    for arc_id, arc in enumerate(d.arcs):
        if arc.component == component:
            arc_map[arc_id] = None
            deleted_arcs.append(arc_id)
        else:
            arc_map[arc_id] = class_to_new[find(arc_id)]

    new_crossings = [
        Crossing(sign=c.sign,
                 over_arc=arc_map[c.over_arc],
                 under_in_arc=arc_map[c.under_in_arc],
                 under_out_arc=arc_map[c.under_out_arc],
                 over_component=component_map[c.over_component],
                 under_component=component_map[c.under_component],
                 pd=c.pd)
        for c in surviving]

    # a survivor whose every under-crossing involved the deleted component is
    # left without a Wirtinger break; give it a kink so the presentation
    # bookkeeping stays uniform (except for the bare crossingless unknot)
    kinked = []
    mu_new = d.mu - 1
    has_under = {comp: False for comp in range(1, mu_new + 1)}
    for c in new_crossings:
        has_under[c.under_component] = True
    for comp in range(1, mu_new + 1):
        if has_under[comp]:
            continue
        if mu_new == 1 and not new_crossings:
            break
        arc_ids = [i for i, a in enumerate(new_arcs) if a.component == comp]
        assert len(arc_ids) == 1, "an underless component must have merged to one arc"
        a = arc_ids[0]
        new_crossings.append(Crossing(
            sign=1, over_arc=a, under_in_arc=a, under_out_arc=a,
            over_component=comp, under_component=comp, pd=None))
        kinked.append(comp)

    name = f"{d.name}-drop{component}" if d.name else ""
    new_diagram = LinkDiagram(mu_new, new_arcs, new_crossings, name=name)
    return ComponentDeletion(
        diagram=new_diagram, arc_map=arc_map, component_map=component_map,
        deleted_arcs=tuple(deleted_arcs), kinked_components=tuple(kinked))


def linking_numbers(d: LinkDiagram, component: int):
    """Linking numbers of each surviving component with ``component``:
    half the signed count of crossings between the two, in ascending
    component order (length mu - 1)."""
    if not 1 <= component <= d.mu:
        raise DegenerateInputError(f"component {component} out of range 1..{d.mu}")
    out = []
    for i in range(1, d.mu + 1):
        if i == component:
            continue
        total = sum(c.sign for c in d.crossings
                    if {c.over_component, c.under_component} == {i, component})
        if total % 2 != 0:
            raise ValidationError(
                f"signed crossing count between components {i} and {component} "
                f"is odd; diagram data is inconsistent")
        out.append(total // 2)
    return out
