from hypothesis import HealthCheck, settings

# first calls pay numba compilation; deadlines would misattribute that cost
settings.register_profile(
    "dnacf",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dnacf")
