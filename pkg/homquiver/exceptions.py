"""
.. module:: exceptions
    :platform: Unix, Windows
    :synopsis: Defines custom exceptions

.. moduleauthor:: homquiver developers

"""

from ._utilities import export

ERROR_PREFIX = "HOMQUIVER ERROR: "


@export
class HomquiverException(Exception):
    """ Custom exception for controlling algebraic and homological errors.

    The error details can be retrieved by querying ``data`` class member. The following snippet illustrates a sample
    usage of this exception.

    .. code-block:: python

        from homquiver import exceptions, homology

        try:
            pd = homology.proj_dim(module, cap=3)
        except exceptions.HomquiverException as e:
            print(e)
            print(e.data)
    """
    def __init__(self, msg, data=None):
        super(HomquiverException, self).__init__(ERROR_PREFIX + msg)
        self.data = data if data is not None else dict()


@export
class ParseError(HomquiverException):
    """ Raised by the text format readers. ``line`` and ``column`` are 1-based. """
    def __init__(self, msg, line, column, data=None):
        super(ParseError, self).__init__("parse error at {0}:{1}: {2}".format(line, column, msg), data=data)
        self.line = line
        self.column = column


@export
class UndeterminedError(HomquiverException):
    """ Raised when a requested value lies beyond a computed degree cap and no certificate decides it. """
    pass
