SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

# Curve types of interior edges, from the apex relation w1 + w2 = a*v1 + b*v2
CURVE_FLOP = 'Flop'
CURVE_RIGID = 'Rigid'
CURVE_WIDE = 'Wide'

WALL_DIVISOR = 'Divisor'
WALL_FLOP = 'FlopCurve'
WALL_LONG_SIDE = 'LongSide'

WALL_ROMAN = {
    WALL_DIVISOR: '0',
    WALL_FLOP: 'I',
    WALL_LONG_SIDE: 'III'
}

# Vertex label rules; three lines are tried first when they meet
RULE_LINES = 'lines'
RULE_CHAMPIONS = 'champions'
RULE_THREE_LINES = 'three_lines'
RULE_GGRAPH = 'ggraph'
RULE_UNRESOLVED = 'unresolved'

METHOD_FAST_PATH = 'CorollaryFastPath'
METHOD_SEARCH = 'PathSearch'
METHOD_FAILED = 'Failed'
METHOD_DEGENERATE = 'Degenerate'

MODEL_ASSUMPTIONS = [
    'paths are flip sequences; type 0/0\' crossings are abstracted away',
    'every flip sequence is assumed realizable by a path avoiding type III walls',
    'divisor-wall labels met mid-path are not added to chi(gamma)'
]
