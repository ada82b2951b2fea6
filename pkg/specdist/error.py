# -*- coding: utf-8 -*-
# spectral-distance, Connes distances on finite spectral triples,
# (C) 2026 The spectral-distance authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
specdist.error
~~~~~~~~~~~~~~

This module provides custom exception classes for the library. Every
failure raised by specdist derives from :class:`SpecdistError`.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""


class SpecdistError(Exception):
    """
    Base class for all exceptions

    :param message: User defined message.
    """

    def __init__(self, message, **kwargs):
        super(SpecdistError, self).__init__(**kwargs)
        self.message = message

    def __str__(self):
        return "{name}: message: {message}".format(
            name=self.__class__.__name__,
            message=self.message
        )


class InvalidArgumentError(SpecdistError):
    """
    InvalidArgumentError is raised when an unexpected
    argument is received by the callee.
    """
    pass


class DimensionMismatch(SpecdistError):
    """
    DimensionMismatch is raised when operand shapes are incompatible.
    """
    pass


class NotHermitian(SpecdistError):
    """
    NotHermitian is raised when a matrix required to be self-adjoint
    fails the symmetry check.
    """
    pass


class NoConvergence(SpecdistError):
    """
    NoConvergence is raised when an iterative solver exhausts its
    iteration budget before meeting its tolerance.

    :param message: User defined message.
    :param lower_bound: Best certified lower bound found so far.
    :param upper_bound: Best certified upper bound found so far.
    :param iterations: Iterations spent.
    """

    def __init__(self, message, lower_bound=None, upper_bound=None,
                 iterations=0):
        super(NoConvergence, self).__init__(message)
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.iterations = iterations

    def __str__(self):
        return ("{name}: message: {message} lower_bound: {lower}"
                " upper_bound: {upper} iterations: {iterations}").format(
                    name=self.__class__.__name__,
                    message=self.message,
                    lower=self.lower_bound,
                    upper=self.upper_bound,
                    iterations=self.iterations)


class InvalidTripleError(SpecdistError):
    """
    InvalidTripleError is raised when a spectral triple violates one of
    its structural invariants.
    """
    pass


class MissingGrading(InvalidTripleError):
    """
    MissingGrading is raised when an even triple is required but the
    triple has no grading operator.
    """
    pass


class AlreadyEven(InvalidTripleError):
    """
    AlreadyEven is raised when evenizing a triple that already carries
    a grading.
    """
    pass


class InvalidStateError(SpecdistError):
    """
    InvalidStateError is raised when a density matrix or coefficient
    functional is not a state.
    """
    pass


class OutOfBall(InvalidStateError):
    """
    OutOfBall is raised when a Bloch vector has norm greater than one.
    """
    pass


class NotProbability(InvalidStateError):
    """
    NotProbability is raised when a vector is not a probability vector.
    """
    pass


class InvalidMetricError(SpecdistError):
    """
    InvalidMetricError is raised when a distance matrix is not an
    extended metric.
    """
    pass


class RhoNotInAlgebra(SpecdistError):
    """
    RhoNotInAlgebra is raised when the difference of two density
    matrices does not lie in the represented algebra.
    """
    pass


class DualUnavailable(SpecdistError):
    """
    DualUnavailable is raised when the dual formula is requested for
    states that are not given by density matrices.
    """
    pass


class Infeasible(SpecdistError):
    """
    Infeasible is raised when infinite costs disconnect the supports of
    a transport problem.
    """
    pass


class NonUnital(SpecdistError):
    """
    NonUnital is raised when the identity is not in the span of an
    algebra basis.
    """
    pass


class PythagorasViolation(SpecdistError):
    """
    PythagorasViolation is raised when a measured ratio leaves the
    interval [1, sqrt(2)] beyond tolerance. This always points at a
    solver failure.

    :param message: User defined message.
    :param report: The offending :class:`PythagorasReport`.
    """

    def __init__(self, message, report=None):
        super(PythagorasViolation, self).__init__(message)
        self.report = report


class InvalidFileError(SpecdistError):
    """
    InvalidFileError is raised when an input file cannot be parsed.
    """
    pass
