import pytest

from symconf import _kernels
from symconf.enumeration import enumerate_configs

BACKENDS = [_kernels.pykernels] + ([_kernels.ckernels] if _kernels.ckernels is not None else [])


@pytest.fixture(scope="session")
def classes():
    """Connected classes for 7 <= v <= 12, computed once per session."""
    cache = {}

    def get(v):
        if v not in cache:
            cache[v] = enumerate_configs(v)
        return cache[v]

    return get


@pytest.fixture(params=BACKENDS, ids=lambda k: k.BACKEND)
def backend(request):
    return request.param
