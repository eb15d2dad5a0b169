from hypothesis import HealthCheck, settings

# The exhaustive randomized sweeps (>= 1000 cases per property) live in
# test_acceptance.py with seeded generators; the per-module hypothesis
# tests exist for shrinking quality, so a smaller example budget keeps the
# whole suite inside its time bound.
settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=(HealthCheck.too_slow,),
)
settings.load_profile("suite")
