"""Structural-move search; saddles found by bubbling cusps together with exchanges."""
import sys, time
from collections import deque
sys.path.insert(0, "dev")
from pretzel import pretzel_diagram
from legfill.front import Front, OrientedFront, parse_front, format_front, front_homfly
from legfill.homfly import homfly
from legfill.cobordism import (apply_move, Birth, Saddle, R1, R2, Exchange,
                               PatternMismatch, InternalError)

TARGET = homfly(pretzel_diagram((3, 3, -3)))
MEMO = {}

MAX_X = 10
MAX_R1 = 2
MAX_R2 = 5

def bubble_saddle(front):
    """Try to create an adjacent R(k)/L(k) pair with exchanges, then saddle."""
    events = front.events
    results = []
    for i, (ki, li) in enumerate(events):
        if ki != "R":
            continue
        for j in range(i + 1, min(i + 7, len(events))):
            kj, lj = events[j]
            if kj != "L":
                continue
            # bubble the L event leftwards to position i+1
            work = front
            moves = []
            ok = True
            for pos in range(j - 1, i, -1):
                try:
                    work = apply_move(work, Exchange(pos))
                    moves.append(Exchange(pos))
                except (PatternMismatch, InternalError):
                    ok = False
                    break
            if not ok:
                continue
            (k1, l1), (k2, l2) = work.events[i:i + 2]
            if k1 == "R" and k2 == "L" and l1 == l2:
                try:
                    f2 = apply_move(work, Saddle(i, l1))
                except (PatternMismatch, InternalError):
                    continue
                if f2.component_count() == 1:
                    results.append((moves, Saddle(i, l1), f2))
    return results

def structural_neighbors(front, u1, u2):
    for i, (kind, level) in enumerate(front.events):
        if kind == "L":
            r2v, r1v = ("lu", "ld"), ("lu", "ll")
        elif kind == "R":
            r2v, r1v = ("ru", "rd"), ("ru", "rl")
        else:
            continue
        if u2 < MAX_R2:
            for v in r2v:
                try:
                    yield R2(i, v, True), apply_move(front, R2(i, v, True)), u1, u2 + 1
                except (PatternMismatch, InternalError):
                    pass
        if u1 < MAX_R1:
            for v in r1v:
                try:
                    yield R1(i, v, True), apply_move(front, R1(i, v, True)), u1 + 1, u2
                except (PatternMismatch, InternalError):
                    pass

starts = [
    ("nested", parse_front("L 1 / L 2 / R 2 / R 1"), (Birth(1), Birth(2, 1))),
    ("stacked", parse_front("L 1 / L 3 / R 3 / R 1"), (Birth(1), Birth(3, 1))),
]

budget = int(sys.argv[1]) if len(sys.argv) > 1 else 200000
seen = set()
queue = deque()
for name, f, births in starts:
    queue.append((f, births, 0, 0))
    seen.add(f.events)

nodes = 0
found = None
t0 = time.time()
while queue and nodes < budget and not found:
    front, path, u1, u2 = queue.popleft()
    nodes += 1
    nx = front.crossing_count()
    if nx >= 9:
        for exmoves, sad, f2 in bubble_saddle(front):
            if front_homfly(OrientedFront(f2), MEMO) == TARGET:
                found = (front, path, exmoves, sad, f2)
                break
    if found:
        break
    for move, f2, n1, n2 in structural_neighbors(front, u1, u2):
        if f2.crossing_count() > MAX_X or len(f2.events) > 20:
            continue
        if f2.events in seen:
            continue
        seen.add(f2.events)
        queue.append((f2, path + (move,), n1, n2))

print("nodes:", nodes, "time %.1f" % (time.time()-t0), "queue:", len(queue))
if found:
    front, path, exmoves, sad, f2 = found
    print("FOUND")
    print("path:", path)
    print("exchanges:", exmoves)
    print("saddle:", sad)
    print("pre-saddle front:", format_front(front, inline=True))
    print("end front:", format_front(f2, inline=True))
    print("end tb:", OrientedFront(f2).tb(), "cusps:", len(f2.structure.left_cusps))
else:
    print("not found")
