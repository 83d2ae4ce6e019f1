from hypothesis import settings

# big exact-rational examples can blow the default per-example deadline
settings.register_profile("quickvar", deadline=None)
settings.load_profile("quickvar")
