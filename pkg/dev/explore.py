"""Movie-design workbench for the m(9_46) fixture."""
import sys
sys.path.insert(0, "dev")
from pretzel import pretzel_diagram
from legfill.front import Front, OrientedFront, parse_front, format_front, front_homfly
from legfill.homfly import homfly
from legfill.cobordism import (apply_move, Birth, Saddle, R1, R2, R3, Exchange,
                               PinchCrossing, PatternMismatch, replay_script, format_move)

TARGET = homfly(pretzel_diagram((3, 3, -3)))

def info(front):
    of = OrientedFront(front)
    st = front.structure
    comps = []
    for comp in st.components:
        strands = set(comp.strands)
        w = sum(of.crossing_sign(c.ordinal) for c in st.crossings
                if c.upper in strands and c.lower in strands)
        comps.append((w - len(comp.right_cusps), len(comp.left_cusps), len(comp.right_cusps)))
    signs = of.crossing_signs()
    return dict(ncomp=len(st.components), comps=comps,
                nx=len(signs), pos=signs.count(1), neg=signs.count(-1),
                tb=of.tb() if len(st.components) == 1 else None)

def saddle_spots(front):
    out = []
    for i in range(len(front.events) - 1):
        (k1, l1), (k2, l2) = front.events[i:i+2]
        if k1 == "R" and k2 == "L" and l1 == l2:
            out.append((i, l1))
    return out

def try_saddle(front):
    res = []
    for at, level in saddle_spots(front):
        try:
            f2 = apply_move(front, Saddle(at, level))
        except PatternMismatch:
            continue
        if f2.component_count() == 1:
            p = front_homfly(OrientedFront(f2))
            res.append((at, level, f2, p == TARGET, OrientedFront(f2).tb()))
    return res

def legal_pokes(front):
    out = []
    for i, (kind, level) in enumerate(front.events):
        for variant in ("lu", "ld") if kind == "L" else (("ru", "rd") if kind == "R" else ()):
            try:
                f2 = apply_move(front, R2(i, variant, True))
                out.append((i, variant, f2))
            except (PatternMismatch, Exception):
                pass
    return out
