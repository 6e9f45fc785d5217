"""
Hook lengths, beta-sets and core predicates
===========================================

A partition's largest hook is the largest element of its beta-set, and
whether it is an s-core can be read off the beta-set alone.
"""

from corehook.partitions import (
    beta_set,
    hook_length_grid,
    is_d_distinct,
    is_s_core,
    is_st_core,
    max_hook,
    partition_from_beta,
)
from corehook.render import young_ascii

# The Young diagram of (8, 6, 3, 1), each cell showing its hook length
lam = (8, 6, 3, 1)
print(young_ascii(lam))

# The first column of the grid is the beta-set
print("first column:", [row[0] for row in hook_length_grid(lam)])
print("beta-set:    ", sorted(beta_set(lam), reverse=True))
print("max hook:    ", max_hook(lam))

# Going back from the beta-set recovers the partition
print("round trip:  ", partition_from_beta(beta_set(lam)))

# No cell has hook length 7 or 10, so this is a (7, 10)-core
print("7-core:", is_s_core(lam, 7), " (7,10)-core:", is_st_core(lam, 7, 10))
# but e.g. hook length 9 does occur
print("9-core:", is_s_core(lam, 9))

# Consecutive parts differ by 2, 3, 2: 2-distinct but not 3-distinct
print("2-distinct:", is_d_distinct(lam, 2), " 3-distinct:", is_d_distinct(lam, 3))
