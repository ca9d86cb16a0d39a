"""Placeholder without the event loop."""


class Tk:
    pass
