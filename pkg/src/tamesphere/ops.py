"""Kernel selection: compiled extension when available, pure Python otherwise.

Set TAMESPHERE_PURE_PYTHON=1 to force the pure-Python kernels (used by the
benchmark and by tests that compare the two backends).
"""

import os

if os.environ.get("TAMESPHERE_PURE_PYTHON"):
    from tamesphere._pyops import (  # noqa: F401
        angle_cmp2,
        cross3,
        dot_sign,
        primitive,
        sign_vector,
        vadd,
        vdot,
        vneg,
        vscale,
    )

    BACKEND = "python"
else:
    try:
        from tamesphere._fastops import (  # noqa: F401
            angle_cmp2,
            cross3,
            dot_sign,
            primitive,
            sign_vector,
            vadd,
            vdot,
            vneg,
            vscale,
        )

        BACKEND = "compiled"
    except ImportError:
        from tamesphere._pyops import (  # noqa: F401
            angle_cmp2,
            cross3,
            dot_sign,
            primitive,
            sign_vector,
            vadd,
            vdot,
            vneg,
            vscale,
        )

        BACKEND = "python"
