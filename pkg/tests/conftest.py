import pytest

from quasibgg import _kernels

BACKENDS = [pytest.param(_kernels.pykernels, id="python")]
if _kernels.ckernels is not None:
    BACKENDS.append(pytest.param(_kernels.ckernels, id="cython"))
