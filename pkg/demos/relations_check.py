"""Build the rewrite table and check every relation two ways."""

import random
from collections import Counter

from skein4 import Normalizer, default_table, gen, mirror
from skein4.traceoracle import eval_skein_classical, random_sl2_tuple

table = default_table()
print("instances per family:", dict(Counter(i.family for i in table.instances)))
print("oriented rules:", len(table.rules), " residues:", len(table.residues))

# at q^(1/2) = -1 every generator becomes minus a trace of SL(2) matrices
rng = random.Random(0)
tuples = [random_sl2_tuple(rng) for _ in range(20)]
bad = [i for i in table.instances
       if any(eval_skein_classical(i.residue, t) != 0 for t in tuples)]
print("classically nonvanishing instances:", len(bad))

nf = Normalizer(table)
bad = [i for i in table.instances
       if nf.normalize(i.residue) or nf.normalize(mirror(i.residue))]
print("instances whose residue or mirror does not rewrite to 0:", len(bad))

for pair in (("t14", "t12"), ("t24", "t13")):
    rule = table.rules[tuple(gen(n) for n in pair)]
    tag = " (inverted)" if rule.inverted else ""
    print(f"{rule.kind}{tag} rule {'*'.join(pair)} ->", rule.rhs)
