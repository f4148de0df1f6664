"""
Error hierarchy shared by services and the command line
"""


class GraphDiscordError(Exception):
    """Base error; exit_code is what the command line returns for it"""
    
    exit_code = 1


class GraphInputError(GraphDiscordError):
    """Malformed input text or invalid arguments"""
    
    exit_code = 2


class EmptyGraphError(GraphInputError):
    """Graph has no density matrix (total degree 0)"""


class SearchSpaceError(GraphInputError):
    """Requested exhaustive search is above the configured cap"""


class DimensionError(GraphDiscordError):
    """Vertex count does not match m*n, or matrix orders differ"""
    
    exit_code = 3


class VerificationMismatchError(GraphDiscordError):
    """Combinatorial measure disagreed with the matrix oracle"""
    
    exit_code = 4
