''' Exceptions raised by the construction, analysis and CLI modules. '''

class ExtremalError(Exception):
    ''' Base class of every error raised by this package. '''

class GraphError(ExtremalError):
    ''' Invalid use of a graph or graph builder. '''

class SelfLoop(GraphError):
    ''' An edge {u, u} was offered to a builder. '''

    def __init__(self, vertex: int):
        super().__init__(f'self-loop at vertex {vertex}')
        self.vertex = vertex

class VertexOutOfRange(GraphError):
    ''' A vertex id is not in 0..n-1. '''

    def __init__(self, vertex: int, vertex_count: int):
        super().__init__(f'vertex {vertex} out of range for {vertex_count} vertices')
        self.vertex = vertex
        self.vertex_count = vertex_count

class Disconnected(GraphError):
    ''' The graph is not connected, so its diameter is undefined. '''

class EmptyGraph(GraphError):
    ''' The graph has no vertices. '''

class ModelError(ExtremalError):
    ''' Invalid request to a graph model. '''

class Overflow(ModelError):
    ''' Vertex or edge counts would not fit in 64 bits. '''

class UnsupportedT(ModelError):
    ''' The requested t is outside what the operation supports. '''

class BudgetExceeded(ModelError):
    ''' The request is larger than the configured work budget. '''

class InvalidConfig(ModelError):
    ''' Generator configuration violates its invariants. '''

class AnalysisError(ExtremalError):
    ''' An analysis could not be carried out. '''

class InsufficientPoints(AnalysisError):
    ''' Fewer than three distribution points fall in the fit window. '''

class TheoremViolation(AnalysisError):
    ''' The diameter/completeness/scale-free implication chain failed. '''

class FormatError(ExtremalError):
    ''' Invalid file or command input. '''

class ParseError(FormatError):
    ''' A line of an edge list could not be parsed. '''

    def __init__(self, line_number: int, line: str, reason: str):
        super().__init__(f'line {line_number}: {reason}: {line!r}')
        self.line_number = line_number
        self.line = line

class SpecError(FormatError):
    ''' A campaign spec file is malformed. '''

class TooLarge(FormatError):
    ''' The graph is too large for the requested export. '''

class InvalidParams(FormatError):
    ''' Command parameters are missing or inconsistent. '''
