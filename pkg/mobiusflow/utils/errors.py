from .utils_translation import TextTranslation

__all__ = ['FieldMismatchError', 'ShapeError', 'SingularMatrixError', 'MembershipError',
           'UnsupportedEmbeddingError', 'QuadratureError', 'DegenerateMetricError',
           'InvariantViolation', 'ConfigError']


def _message(key, detail=None):
    text = TextTranslation().get_str(key)
    if detail is None:
        return text
    return '%s %s' % (text, detail)


class FieldMismatchError(ValueError):
    """ Operands carry different field tags. """

    def __init__(self, left, right):
        super(FieldMismatchError, self).__init__(_message('Error_field', '%s and %s' % (left, right)))


class ShapeError(ValueError):
    """ Operands have incompatible shapes. """

    def __init__(self, detail='', key='Error_shape'):
        super(ShapeError, self).__init__(_message(key, detail))


class SingularMatrixError(ArithmeticError):
    """ Gaussian elimination met a pivot below threshold.

    Attributes
    ----------
    pivot : float
        Magnitude of the failing pivot.
    """

    def __init__(self, pivot):
        self.pivot = float(pivot)
        super(SingularMatrixError, self).__init__(_message('Error_singular', '%.3e' % self.pivot))


class MembershipError(ValueError):
    """ An element or a tangent vector is not where it has to be. """

    def __init__(self, key, detail=None):
        super(MembershipError, self).__init__(_message(key, detail))


class UnsupportedEmbeddingError(ValueError):
    """ The pair of groups is not one of the inclusions (a)-(e). """

    def __init__(self, src, dst):
        super(UnsupportedEmbeddingError, self).__init__(_message('Error_embedding', '%s -> %s' % (src, dst)))


class QuadratureError(ValueError):
    """ Quadrature cannot be carried out as requested. """

    def __init__(self, key, detail=None):
        super(QuadratureError, self).__init__(_message(key, detail))


class DegenerateMetricError(ArithmeticError):
    """ The metric tensor is not positive definite.

    Attributes
    ----------
    min_eigenvalue : float
        Smallest eigenvalue of the offending tensor.
    """

    def __init__(self, min_eigenvalue):
        self.min_eigenvalue = float(min_eigenvalue)
        super(DegenerateMetricError, self).__init__(_message('Error_degenerate', '%.3e' % self.min_eigenvalue))


class InvariantViolation(RuntimeError):
    """ A state that valid inputs can not reach. """

    def __init__(self, detail=None, key='Error_invariant'):
        super(InvariantViolation, self).__init__(_message(key, detail))


class ConfigError(ValueError):
    """ Invalid experiment configuration.

    Attributes
    ----------
    key : str
        Dotted path of the offending entry.
    """

    def __init__(self, key, detail=None):
        self.key = key
        text = '%s: %s' % (_message('Error_config'), key)
        if detail:
            text += ' (%s)' % detail
        super(ConfigError, self).__init__(text)
