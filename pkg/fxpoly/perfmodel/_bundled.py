import json
from importlib import resources
from typing import List

from fxpoly.perfmodel._profile import PerfProfile
from fxpoly.util import UsageError

BUNDLED_PPDS = ('privpy-rep2k', 'rep2k', 'repf', 'shamir', 'ps-rep2k', 'ps-repf')


def bundled_ppd_names() -> List[str]:
    return list(BUNDLED_PPDS)


def bundled_ppd(name: str) -> PerfProfile:
    if name not in BUNDLED_PPDS:
        raise UsageError(f'unknown bundled profile "{name}", expected one of {", ".join(BUNDLED_PPDS)}')
    text = resources.files('fxpoly.perfmodel').joinpath('ppd', f'{name}.json').read_text()
    return PerfProfile.from_json(json.loads(text))
