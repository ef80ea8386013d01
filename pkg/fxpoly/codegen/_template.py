import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from fxpoly.fitters import PiecewisePlan
from fxpoly.fxp import FxpValue
from fxpoly.util import TemplateError, UsageError

# Bundled target ids, their files and whether literals are emitted as quoted strings
BUNDLED_TEMPLATES = {
    'sim': ('sim.tpl', True),
    'spdz-style': ('spdz_style.tpl', False),
}


@dataclass(frozen=True)
class Template:
    target: str
    text: str
    quote_literals: bool = False


class TemplateSource(ABC):

    @abstractmethod
    def load(self) -> Template:
        pass


class BundledTemplateSource(TemplateSource):
    def __init__(self, target: str):
        if target not in BUNDLED_TEMPLATES:
            raise UsageError(f'unknown template "{target}", expected one of {", ".join(BUNDLED_TEMPLATES)}')
        self.target = target

    def load(self) -> Template:
        filename, quoted = BUNDLED_TEMPLATES[self.target]
        text = resources.files('fxpoly.codegen').joinpath('templates', filename).read_text()
        return Template(self.target, text, quoted)


class FileTemplateSource(TemplateSource):
    def __init__(self, path, quote_literals: bool = False):
        self.path = Path(path)
        self.quote_literals = quote_literals

    def load(self) -> Template:
        return Template(str(self.path), self.path.read_text(), self.quote_literals)


def load_template(target_or_path, quote_literals: bool = False) -> Template:
    if str(target_or_path) in BUNDLED_TEMPLATES:
        return BundledTemplateSource(str(target_or_path)).load()
    return FileTemplateSource(target_or_path, quote_literals).load()


class _Bindings(dict):
    def __missing__(self, key):
        raise TemplateError(key)


def _literal(value: FxpValue, quoted: bool) -> str:
    text = value.to_decimal_str()
    return f'"{text}"' if quoted else text


def _list(values: Sequence[FxpValue], quoted: bool) -> str:
    return '[' + ', '.join(_literal(v, quoted) for v in values) + ']'


def _table(rows: Sequence[Sequence[FxpValue]], quoted: bool) -> str:
    return '[' + ', '.join(_list(row, quoted) for row in rows) + ']'


def render(plan: PiecewisePlan, template: Template, name: str) -> str:
    """
    Substitutes the plan's parameters into the template as exact decimal
    literals. Available placeholders: {breaks}, {end}, {coeffA}, {scaler},
    {k}, {m}, {pieces}, {function_name}, {format}, {n}, {f}, {overflow},
    {truncation} and {defaults}.
    """
    if not plan.finalized:
        raise UsageError('render needs a finalized plan, see finalize_plan')

    fmt, quoted = plan.format, template.quote_literals
    bindings = _Bindings(
        breaks=_list(plan.breaks, quoted),
        end=_literal(plan.end, quoted),
        coeffA=_table([p.coeffs for p in plan.pieces], quoted),
        scaler=_table([p.scalers for p in plan.pieces], quoted),
        k=plan.k,
        m=plan.m,
        pieces=len(plan.pieces),
        function_name=name,
        format=str(fmt),
        n=fmt.n,
        f=fmt.f,
        overflow=fmt.overflow,
        truncation=fmt.truncation,
        defaults=json.dumps(list(plan.defaults)),
    )
    try:
        return template.text.format_map(bindings)
    except (IndexError, ValueError) as e:
        raise TemplateError('', f'malformed template {template.target}: {e}')
