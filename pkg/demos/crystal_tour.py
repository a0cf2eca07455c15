"""Walk the level-1 finite crystal: enumeration, minimal elements, and a
lowering path from the highest-weight vertex."""

from spincrystal import cartan_core, perfect_crystal as pc

elems = pc.enumerate_level(1)
print("level-1 crystal has", len(elems), "elements")

mins = pc.minimal_elements(1)
print("minimal elements:", len(mins))
for b in mins:
    print("   eps:", pc.eps_weight(b), " phi:", pc.phi_weight(b))

print()
print("lowering walk from the spin unit element:")
cur = pc.unit_minimal(5)
path = []
for k in (5, 3, 4, 2, 1):
    nxt = pc.f_tilde(k, cur)
    if nxt is None:
        print("  direction", k, "is not applicable; stopping")
        break
    path.append(k)
    cur = nxt
print("  applied directions:", path)
print("  landed on rows:", cur.rows)
print("  weight:", pc.wt(cur),
      "eps-level:", cartan_core.level(pc.eps_weight(cur)),
      "(minimal iff this equals 1)")
