"""Dev oracle: pretzel link diagrams P(e1,...,en) as oriented PlanarDiagrams.

Vertical twist regions side by side between a top and a bottom bus.
Region parameter e: |e| stacked crossings; for e > 0 the strand entering
top-left passes over (NW-SE diagonal on top), for e < 0 under.
"""
from legfill.homfly import Crossing, PlanarDiagram

_DIRVEC = {("NW","SE"): (1,-1), ("SE","NW"): (-1,1), ("NE","SW"): (-1,-1), ("SW","NE"): (1,1)}

def pretzel_diagram(params):
    # ports: ("X", i, j, corner); junctions: ("T", i, side), ("B", i, side)
    arcs = []
    n = len(params)
    over_diag = {}
    for i, e in enumerate(params):
        t = abs(e)
        for j in range(t):
            over_diag[(i, j)] = ("NW", "SE") if e > 0 else ("NE", "SW")
        if t == 0:
            arcs.append((("T", i, "L"), ("B", i, "L")))
            arcs.append((("T", i, "R"), ("B", i, "R")))
        else:
            arcs.append((("T", i, "L"), ("X", i, 0, "NW")))
            arcs.append((("T", i, "R"), ("X", i, 0, "NE")))
            for j in range(t - 1):
                arcs.append((("X", i, j, "SW"), ("X", i, j + 1, "NW")))
                arcs.append((("X", i, j, "SE"), ("X", i, j + 1, "NE")))
            arcs.append((("X", i, t - 1, "SW"), ("B", i, "L")))
            arcs.append((("X", i, t - 1, "SE"), ("B", i, "R")))
    for i in range(n):
        arcs.append((("T", i, "R"), ("T", (i + 1) % n, "L")))
        arcs.append((("B", i, "R"), ("B", (i + 1) % n, "L")))

    # Compose arcs through junction labels; keep only crossing ports.
    link = {}
    for a, b in arcs:
        link.setdefault(a, []).append(b)
        link.setdefault(b, []).append(a)

    def is_port(x):
        return x[0] == "X"

    # walk from each crossing port through junctions to the opposite port
    def walk(start):
        prev, cur = start, link[start][0]
        seen_junctions = []
        while not is_port(cur):
            nxts = [x for x in link[cur] if x != prev]
            if not nxts:  # dead end: two-sided junction back
                nxts = [x for x in link[cur]]
            prev, cur = cur, nxts[0]
        return cur

    # Arc identification between ports (each port has exactly one arc end)
    port_arc = {}
    free_loops = 0
    visited_junctions = set()
    ports = [p for p in link if is_port(p)]
    for p in ports:
        if p in port_arc:
            continue
        q = walk(p)
        port_arc[p] = q
        port_arc[q] = p
    if not ports:
        # count closed junction loops
        seen = set()
        for j in link:
            if j in seen:
                continue
            prev, cur = j, link[j][0]
            seen.add(j)
            while cur != j:
                seen.add(cur)
                nxts = [x for x in link[cur] if x != prev]
                prev, cur = cur, nxts[0]
            free_loops += 1

    # orient: traverse strands; continuation inside a crossing: NW<->SE, NE<->SW
    diag = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
    unvisited = set(ports)
    edge_of = {}   # directed: port pair (out_port, in_port) -> edge id
    arc_dir = {}   # port -> "out"/"in" for its arc end
    eid = 0
    comps = 0
    while unvisited:
        comps += 1
        start = min(unvisited, key=str)
        # enter the crossing of `start` at the port `start`... define: we BEGIN by exiting along start's arc.
        cur = start
        while True:
            # exit crossing via port cur -> arc to port_arc[cur]
            other = port_arc[cur]
            edge_of[(cur, other)] = eid
            eid += 1
            unvisited.discard(cur)
            unvisited.discard(other)
            # enter crossing at `other`, continue through the diagonal
            cont = (other[0], other[1], other[2], diag[other[3]])
            cur = cont
            if cur == start:
                break
            if cur not in unvisited and (cur, port_arc[cur]) in edge_of:
                break
    # build crossing records
    crossings = []
    for (i, j), od in over_diag.items():
        # four ports; find directed edges: for each port, it's either an out (edge_of has (port, other)) or in
        def port_edge(corner):
            p = ("X", i, j, corner)
            o = port_arc[p]
            if (p, o) in edge_of:
                return edge_of[(p, o)], "out"
            return edge_of[(o, p)], "in"
        info = {c: port_edge(c) for c in ("NW", "NE", "SW", "SE")}
        over_a, over_b = od
        # over strand runs between over_a and over_b; direction: whichever end is "in" is where it enters
        if info[over_a][1] == "in":
            o_in_c, o_out_c = over_a, over_b
        else:
            o_in_c, o_out_c = over_b, over_a
        under_pair = tuple(c for c in ("NW", "NE", "SW", "SE") if c not in od)
        ua, ub = under_pair
        if info[ua][1] == "in":
            u_in_c, u_out_c = ua, ub
        else:
            u_in_c, u_out_c = ub, ua
        # sign via direction vectors (port IN means strand moves from that corner inward: direction = center - corner ~ -corner offset)
        corner_vec = {"NW": (-1, 1), "NE": (1, 1), "SW": (-1, -1), "SE": (1, -1)}
        def dirvec(cin, cout):
            return (corner_vec[cout][0] - corner_vec[cin][0], corner_vec[cout][1] - corner_vec[cin][1])
        ov = dirvec(o_in_c, o_out_c)
        uv = dirvec(u_in_c, u_out_c)
        det = ov[0] * uv[1] - ov[1] * uv[0]
        sign = 1 if det > 0 else -1
        crossings.append(Crossing.from_strands(
            sign,
            info[o_in_c][0], info[o_out_c][0],
            info[u_in_c][0], info[u_out_c][0]))
    return PlanarDiagram(tuple(crossings), free_loops)
