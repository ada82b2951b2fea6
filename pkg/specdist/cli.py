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
specdist.cli
~~~~~~~~~~~~

The ``specdist`` command.

Exit codes: 0 on success, 1 on invalid input or a failed verification,
2 when a solver does not converge.

:copyright: (c) 2026 by the spectral-distance authors.
:license: Apache 2.0, see LICENSE for more details.

"""

import functools
import itertools
import logging

import click
import numpy as np

from .berezin import BerezinMaps, SphereQuadrature, symbol as berezin_symbol
from .definitions import VIOLATION
from .engine import distance, kantorovich, reduction
from .error import InvalidArgumentError, NoConvergence, SpecdistError
from .helpers import DEFAULT_QUADRATURE_NODES
from .marshal import (FORMATS, TEXT, distance_record, render_record,
                      render_rows, transport_record)
from .options import Chain, EnvOptions, FileOptions, Options, Static
from .parsers import (load_metric, load_state, load_triple, parse_vector,
                      parse_probability)
from .pythagoras import pythagoras_check
from .sampling import generator, random_state, vertex_states
from .surface import COLUMNS, marginal_projection, sample, vertex_rows
from .thread_pool import run_tasks
from .triples import product_state, product_triple, state_from_bloch
from .verify import run_suite, suite_names

logger = logging.getLogger(__name__)

_trace_handler = None

PYTHAGORAS_COLUMNS = ('left', 'right', 'phi', 'psi', 'd1', 'd2',
                      'd_product', 'd_spectral', 'ratio', 'verdict')
VERIFY_COLUMNS = ('suite', 'check', 'status', 'error', 'tolerance',
                  'message')
SYMBOL_COLUMNS = ('x', 'y', 'z', 'sigma')


def trace_on(stream):
    """
    Write specdist log records at DEBUG to ``stream``.

    :param stream: Stream where the trace is written to.
    """
    global _trace_handler
    if not stream:
        raise InvalidArgumentError('Input stream for trace output is '
                                   'invalid.')
    trace_off()
    _trace_handler = logging.StreamHandler(stream)
    _trace_handler.setFormatter(logging.Formatter(
        '%(asctime)s %(name)s %(levelname)s %(message)s'))
    root = logging.getLogger('specdist')
    root.addHandler(_trace_handler)
    root.setLevel(logging.DEBUG)


def trace_off():
    """
    Detach the trace handler.
    """
    global _trace_handler
    if _trace_handler is not None:
        root = logging.getLogger('specdist')
        root.removeHandler(_trace_handler)
        root.setLevel(logging.NOTSET)
        _trace_handler = None


def resolve_options(**flags):
    """
    Solver options with flags > environment > file > defaults.
    """
    provider = Chain([Static(**flags), EnvOptions(), FileOptions()])
    return Options(provider).get()


def _exit_codes(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except NoConvergence as error:
            click.echo(str(error), err=True)
            ctx.exit(2)
        except SpecdistError as error:
            click.echo(str(error), err=True)
            ctx.exit(1)
    return wrapper


def _emit(ctx, text):
    with click.open_file(ctx.obj['out'], 'w') as handle:
        handle.write(text)


@click.group()
@click.option('--tol', type=float, default=None,
              help='Relative tolerance of the certified gap.')
@click.option('--max-iter', type=int, default=None,
              help='Cutting-plane iterations per solve.')
@click.option('--seed', type=int, default=None,
              help='Seed of every random draw.')
@click.option('--restarts', type=int, default=None,
              help='Ascent restarts per solve.')
@click.option('--workers', type=int, default=None,
              help='Threads used by batch sweeps.')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default=TEXT,
              help='Output format.')
@click.option('-o', '--out', type=click.Path(), default='-',
              help='Output file, stdout by default.')
@click.option('--trace', is_flag=True,
              help='Log solver progress to stderr.')
@click.pass_context
def main(ctx, tol, max_iter, seed, restarts, workers, fmt, out, trace):
    """
    Connes spectral distances on finite spectral triples.
    """
    if trace:
        trace_on(click.get_text_stream('stderr'))
    ctx.obj = {'flags': dict(tol=tol, max_iter=max_iter, seed=seed,
                             restarts=restarts, workers=workers),
               'fmt': fmt, 'out': out}
    ctx.call_on_close(trace_off)


def _options(ctx):
    if 'options' not in ctx.obj:
        ctx.obj['options'] = resolve_options(**ctx.obj['flags'])
        logger.debug('%s', ctx.obj['options'])
    return ctx.obj['options']


@main.command()
@click.argument('triple', type=click.Path(exists=True, dir_okay=False))
@click.argument('phi', type=click.Path(exists=True, dir_okay=False))
@click.argument('psi', type=click.Path(exists=True, dir_okay=False))
@click.option('--dual', is_flag=True,
              help='Use the ||rho||^2 / L(rho) formula.')
@click.pass_context
@_exit_codes
def dist(ctx, triple, phi, psi, dual):
    """
    Spectral distance between two states.
    """
    options = _options(ctx)
    result = distance(load_triple(triple), load_state(phi), load_state(psi),
                      options, dual=dual)
    logger.info('%s', result)
    _emit(ctx, render_record(distance_record(result), ctx.obj['fmt']))


def _pure_pairs(structure):
    states = [product_state(a, b) for a, b in itertools.product(
        vertex_states(structure.left), vertex_states(structure.right))]
    return list(itertools.combinations(states, 2))


def _random_pairs(structure, samples, seed):
    rng = generator(seed)
    pairs = []
    for _ in range(samples):
        phi, psi = [product_state(random_state(rng, structure.left),
                                  random_state(rng, structure.right))
                    for _ in range(2)]
        pairs.append((phi, psi))
    return pairs


@main.command()
@click.argument('left', type=click.Path(exists=True, dir_okay=False))
@click.argument('right', type=click.Path(exists=True, dir_okay=False))
@click.option('--states', type=click.Choice(['grid', 'random', 'explicit']),
              default='grid', help='Pure product grid, random product '
              'states, or the pair given by --phi and --psi.')
@click.option('--samples', type=int, default=10,
              help='Number of random pairs.')
@click.option('--phi', type=click.Path(exists=True, dir_okay=False))
@click.option('--psi', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@_exit_codes
def pythagoras(ctx, left, right, states, samples, phi, psi):
    """
    Compare d_D with the product metric of the marginal distances.
    """
    options = _options(ctx)
    structure = product_triple(load_triple(left), load_triple(right))
    if states == 'grid':
        pairs = _pure_pairs(structure)
    elif states == 'random':
        pairs = _random_pairs(structure, samples, options.seed)
    else:
        if phi is None or psi is None:
            raise InvalidArgumentError('explicit states need --phi and '
                                       '--psi')
        pairs = [(load_state(phi), load_state(psi))]
    for triple in (structure.left, structure.right, structure.combined):
        reduction(triple)
    reports = run_tasks(
        lambda a, b: pythagoras_check(structure, a, b, options,
                                      raise_on_violation=False),
        pairs, options.workers)
    ratios = [r.ratio for r in reports]
    if ratios:
        logger.info('%d pairs, ratio range [%r, %r]', len(ratios),
                    min(ratios), max(ratios))
    _emit(ctx, render_rows([r.as_row() for r in reports],
                           PYTHAGORAS_COLUMNS, ctx.obj['fmt']))
    if any(r.verdict == VIOLATION for r in reports):
        click.echo('product bounds violated', err=True)
        ctx.exit(1)


@main.command()
@click.argument('metric', type=click.Path(exists=True, dir_okay=False))
@click.argument('p')
@click.argument('q')
@click.pass_context
@_exit_codes
def transport(ctx, metric, p, q):
    """
    Optimal transport on a finite metric space. P and Q are comma
    separated probability vectors.
    """
    space = load_metric(metric)
    plan = kantorovich(space.g, parse_probability(p), parse_probability(q))
    logger.info('%s', plan)
    _emit(ctx, render_record(transport_record(plan), ctx.obj['fmt']))


@main.command()
@click.option('-n', '--resolution', type=int, default=11,
              help='Grid points per axis of [-1, 1]^2.')
@click.pass_context
@_exit_codes
def surface(ctx, resolution):
    """
    Product states of C^2 x C^2 drawn in the tetrahedron.
    """
    rows = sample(resolution) + vertex_rows()
    _emit(ctx, render_rows([dict(zip(COLUMNS, row)) for row in rows],
                           COLUMNS, ctx.obj['fmt']))


@main.command('marginal-projection')
@click.option('--state', 'state_file',
              type=click.Path(exists=True, dir_okay=False),
              help='Simplex state file on C^4.')
@click.option('-p', 'p', help='Comma separated probability vector.')
@click.pass_context
@_exit_codes
def marginal_projection_command(ctx, state_file, p):
    """
    A state of C^4 against the product of its marginals.
    """
    if (state_file is None) == (p is None):
        raise InvalidArgumentError('give exactly one of --state and -p')
    if state_file is not None:
        point = np.clip(np.diag(load_state(state_file).rho).real, 0.0, None)
    else:
        point = parse_probability(p)
    report = marginal_projection(point)
    _emit(ctx, render_record({'point': report.point,
                              'projected': report.projected,
                              'residual': report.residual},
                             ctx.obj['fmt']))


@main.command()
@click.argument('suite')
@click.option('--samples', type=int, default=20,
              help='Random draws per randomized check.')
@click.pass_context
@_exit_codes
def verify(ctx, suite, samples):
    """
    Run an acceptance suite, one of the names listed by --help.
    """
    if suite not in suite_names():
        raise InvalidArgumentError('unknown suite {0!r}; expected one of '
                                   '{1}'.format(suite,
                                                ', '.join(suite_names())))
    checks = run_suite(suite, _options(ctx), samples)
    _emit(ctx, render_rows([c.as_row() for c in checks], VERIFY_COLUMNS,
                           ctx.obj['fmt']))
    failed = [c for c in checks if not c.passed]
    logger.info('%d checks, %d failed', len(checks), len(failed))
    if failed:
        ctx.exit(1)


@main.command()
@click.option('--state', 'state_file',
              type=click.Path(exists=True, dir_okay=False),
              help='Density state file on C^2.')
@click.option('--bloch', help='Comma separated Bloch vector.')
@click.option('-n', '--nodes', type=int, default=DEFAULT_QUADRATURE_NODES,
              help='Quadrature nodes on the sphere.')
@click.pass_context
@_exit_codes
def symbol(ctx, state_file, bloch, nodes):
    """
    Berezin symbol of a qubit state on the sphere nodes.
    """
    if (state_file is None) == (bloch is None):
        raise InvalidArgumentError('give exactly one of --state and '
                                   '--bloch')
    if state_file is not None:
        state = load_state(state_file)
    else:
        state = state_from_bloch(parse_vector(bloch, 'Bloch vector'))
    maps = BerezinMaps(SphereQuadrature(nodes))
    values = berezin_symbol(maps, state).real
    rows = [{'x': node[0], 'y': node[1], 'z': node[2], 'sigma': value}
            for node, value in zip(maps.quadrature.nodes, values)]
    _emit(ctx, render_rows(rows, SYMBOL_COLUMNS, ctx.obj['fmt']))
