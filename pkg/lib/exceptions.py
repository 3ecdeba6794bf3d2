class McKayException(Exception):
    """ This is our base exception class, that all other exceptions inherit from
    """

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context


class GroupParseError(McKayException):
    """ Group or subgroup notation that does not parse
    """
    pass


class GroupError(McKayException):
    """ Invalid group data: SL3 condition, generators outside G, bad subgroup order
    """
    pass


class LatticeError(McKayException):
    pass


class TieError(McKayException):
    """ Two monomials of one character have equal weight at the seed point
    """

    def __init__(self, message, character=None, point=None):
        super().__init__(message, character=character, point=point)
        self.character = character
        self.point = point


class EmptyInterior(McKayException):
    """ The cone of a G-graph has no interior
    """
    pass


class FanError(McKayException):
    pass


class TriangulationError(McKayException):
    pass


class NotFloppable(TriangulationError):
    """ Flip requested on an edge that is not a (-1,-1)-curve
    """

    def __init__(self, message, edge=None, curve_type=None):
        super().__init__(message, edge=edge, curve_type=curve_type)
        self.edge = edge
        self.curve_type = curve_type


class NoPairFound(McKayException):
    pass


class VertexLabelError(McKayException):
    pass


class StabilityError(McKayException):
    pass
