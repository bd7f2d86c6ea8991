"""Bounded BFS over 2-saucer isotopy scripts, saddling everywhere, matching m946."""
import sys
from collections import deque
sys.path.insert(0, "dev")
from pretzel import pretzel_diagram
from legfill.front import Front, OrientedFront, parse_front, format_front, front_homfly
from legfill.homfly import homfly
from legfill.cobordism import (apply_move, Birth, Saddle, R1, R2, R3, Exchange,
                               PatternMismatch, InternalError)

TARGET = homfly(pretzel_diagram((3, 3, -3)))
MEMO = {}

MAX_X = 10          # crossings cap
MAX_LEN = 18        # event word cap
MAX_R1 = 2
MAX_R2 = 5
MAX_MOVES = 11
NODE_BUDGET = int(sys.argv[1]) if len(sys.argv) > 1 else 150000

def saddle_results(front):
    for i in range(len(front.events) - 1):
        (k1, l1), (k2, l2) = front.events[i:i + 2]
        if k1 == "R" and k2 == "L" and l1 == l2:
            try:
                f2 = apply_move(front, Saddle(i, l1))
            except (PatternMismatch, InternalError):
                continue
            if f2.component_count() == 1:
                yield (i, l1), f2

def neighbors(front, used_r1, used_r2):
    n = len(front.events)
    for i, (kind, level) in enumerate(front.events):
        if kind == "L":
            variants_r2 = ("lu", "ld")
            variants_r1 = ("lu", "ll")
        elif kind == "R":
            variants_r2 = ("ru", "rd")
            variants_r1 = ("ru", "rl")
        else:
            continue
        if used_r2 < MAX_R2:
            for v in variants_r2:
                try:
                    yield R2(i, v, True), apply_move(front, R2(i, v, True)), used_r1, used_r2 + 1
                except (PatternMismatch, InternalError):
                    pass
        if used_r1 < MAX_R1:
            for v in variants_r1:
                try:
                    yield R1(i, v, True), apply_move(front, R1(i, v, True)), used_r1 + 1, used_r2
                except (PatternMismatch, InternalError):
                    pass
    for i in range(n - 1):
        try:
            yield Exchange(i), apply_move(front, Exchange(i)), used_r1, used_r2
        except (PatternMismatch, InternalError):
            pass

starts = [
    ("nested", parse_front("L 1 / L 2 / R 2 / R 1")),
    ("stacked", parse_front("L 1 / L 3 / R 3 / R 1")),
    ("sequential", parse_front("L 1 / R 1 / L 1 / R 1")),
]

seen = set()
queue = deque()
for name, f in starts:
    queue.append((f, (), 0, 0))
    seen.add(f.events)

nodes = 0
found = None
while queue and nodes < NODE_BUDGET:
    front, path, u1, u2 = queue.popleft()
    nodes += 1
    if front.crossing_count() >= 9:
        for spot, f2 in saddle_results(front):
            p = front_homfly(OrientedFront(f2), MEMO)
            if p == TARGET:
                found = (front, path, spot, f2)
                break
    if found:
        break
    if len(path) >= MAX_MOVES:
        continue
    for move, f2, n1, n2 in neighbors(front, u1, u2):
        if f2.crossing_count() > MAX_X or len(f2.events) > MAX_LEN:
            continue
        if f2.events in seen:
            continue
        seen.add(f2.events)
        queue.append((f2, path + (move,), n1, n2))

print("nodes explored:", nodes, "queue left:", len(queue))
if found:
    front, path, spot, f2 = found
    print("FOUND!")
    print("pre-saddle:", format_front(front, inline=True))
    print("moves:", path)
    print("saddle at:", spot)
    print("end front:", format_front(f2, inline=True))
    print("end tb:", OrientedFront(f2).tb())
else:
    print("not found within budget")
