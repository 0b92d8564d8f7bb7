import sys, time
sys.path.insert(0, "/root/pkg/src")
from ramseykit.graphs import ColoredGraph, CliqueParams, edge_slot, slot_count
from ramseykit.cover import Generalization
from ramseykit.glue import GlueProblem, encode_glue, unit_propagate
from ramseykit.sat import solve_embedded, LimitExceeded
from ramseykit.enumeration import enumerate_class

qr = {pow(x,2,17) for x in range(1,17)}
blue = 0
for b in range(1,17):
    for a in range(b):
        if (b-a) % 17 in qr:
            blue |= 1 << edge_slot(a,b)
full = (1 << slot_count(17)) - 1
paley17 = ColoredGraph(17, blue, full & ~blue)
mask16 = (1 << slot_count(16)) - 1
paley16 = ColoredGraph(16, paley17.blue & mask16, paley17.red & mask16)

levels35 = enumerate_class(CliqueParams(3,5), 8)
side_a = list(levels35[7].graphs())
for idx in (0, 50, 120):
    g = side_a[idx]
    prob = GlueProblem(Generalization(g), Generalization(paley16), CliqueParams(4,5))
    cnf = unit_propagate(encode_glue(prob)).cnf
    for branch in ("index", "occurrence"):
        t0 = time.perf_counter()
        try:
            v = solve_embedded(cnf, time_limit=240, branch=branch)
            print(f"prob {idx} {branch}: {v.status} conflicts={v.conflicts} {time.perf_counter()-t0:.2f}s", flush=True)
        except LimitExceeded as e:
            print(f"prob {idx} {branch}: LIMIT {e.conflicts} conflicts in {e.elapsed:.1f}s", flush=True)
