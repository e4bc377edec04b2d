from hypothesis import HealthCheck, settings

settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=120,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")
