"""
The counterexample registry
===========================

Five fixed matrix pairs demonstrate that each identity genuinely needs its
hypotheses.  Every entry records which hypothesis flags hold, that the
conclusion fails, and the exact matrix values; two entries carry caveats where
commonly quoted values disagree with direct computation.
"""

from absval import check_registry_instance, registry


def show(matrix):
    return "[" + "; ".join(" ".join(f"{z.real:g}" for z in row) for row in matrix) + "]"


for inst in registry():
    result = check_registry_instance(inst)
    print(f"{inst.ce_id}  (witness against {inst.target_claim})")
    for i, m in enumerate(inst.matrices):
        print(f"  slot {i}: {show(m)}")
    print(f"  hypothesis flags: {result.result.hypothesis_flags}")
    print(f"  conclusion fails: {result.result.conclusion_ok is False}"
          f"   reproduced: {result.ok}")
    for name, residual in result.value_residuals.items():
        print(f"  value {name}: residual {residual:.1e}")
    if inst.caveat:
        print(f"  caveat: {inst.caveat}")
    print()
