import functools
import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=15,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

TAFT_PARAMS = [(2, 2, 1), (3, 3, 1), (4, 2, 2), (4, 4, 1), (6, 3, 2)]


@functools.lru_cache(maxsize=None)
def taft_dualized(N, d, c):
    """(datum, result) for the hat-Taft datum; shared between test modules."""
    from hopfdual.catalog import taft_datum
    from hopfdual.partialdual import partial_dualize
    D = taft_datum(N, d, c)
    return D, partial_dualize(D)


@functools.lru_cache(maxsize=None)
def s3_dualized():
    from hopfdual.catalog import s3_datum
    from hopfdual.partialdual import partial_dualize
    D = s3_datum()
    return D, partial_dualize(D)
