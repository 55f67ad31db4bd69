class LaxMilgramError(ValueError):
    """Raised by every operation of the library.

    ``code`` is the name of the failure, e.g. ``"NotPositiveDefinite"``.
    """

    def __init__(self, code, message):
        super().__init__(code, message)
        self.code = code
        self.message = message

    def __str__(self):
        return self.message
