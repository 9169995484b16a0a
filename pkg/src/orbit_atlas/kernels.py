"""Kernel selection: compiled Cython core when built, pure Python
otherwise.  ORBIT_ATLAS_PURE=1 forces the pure implementation."""

import os

_FORCE_PURE = os.environ.get("ORBIT_ATLAS_PURE", "") not in ("", "0")

if not _FORCE_PURE:
    try:
        from ._kernel_c import (  # noqa: F401
            IMPLEMENTATION, rref, mat_rank, nullspace, solve_linear, mat_mul,
            congruence_inertia, mono_mul, mono_div, mono_lcm,
            poly_normal_form, poly_spoly,
        )
    except ImportError:
        from ._kernel_py import (  # noqa: F401
            IMPLEMENTATION, rref, mat_rank, nullspace, solve_linear, mat_mul,
            congruence_inertia, mono_mul, mono_div, mono_lcm,
            poly_normal_form, poly_spoly,
        )
else:
    from ._kernel_py import (  # noqa: F401
        IMPLEMENTATION, rref, mat_rank, nullspace, solve_linear, mat_mul,
        congruence_inertia, mono_mul, mono_div, mono_lcm,
        poly_normal_form, poly_spoly,
    )
