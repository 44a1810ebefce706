import os
import yaml
from dataclasses import dataclass, field
from typing import List, Optional

from dataclasses import asdict

__all__ = [
    'DictableClass',
    'Engine',
    'Corpus',
    'OracleParams',
    'Output',
    'Config',
    'DEFAULT_CONFIG_PATH',
    'get_config',
]

DEFAULT_CONFIG_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    'configs',
    'default_config.yaml',
)


def dataclass_to_dict(dataclass_instance):
    return asdict(dataclass_instance)


class DictableClass:
    def __iter__(self):
        yield from dataclass_to_dict(self).items()


@dataclass
class Engine(DictableClass):
    seed: int
    num_workers: int = 0
    check_reverse_order: bool = True
    log_level: str = 'INFO'


@dataclass
class Corpus(DictableClass):
    count: int
    ranks: List[int] = field(default_factory=lambda: [2, 3, 4])
    max_coord: int = 8
    max_rays: int = 5
    max_det: Optional[int] = None


@dataclass
class OracleParams(DictableClass):
    height_factor: int = 2
    box: int = 6
    coverage_bound: int = 12


@dataclass
class Output(DictableClass):
    out_dir: Optional[str] = None
    json: bool = False
    timings: bool = False


@dataclass
class Config(DictableClass):
    exp_name: str
    comment: str
    engine: Engine
    corpus: Corpus
    oracle: OracleParams
    output: Output


def get_config(file_path: str = DEFAULT_CONFIG_PATH) -> Config:
    with open(file_path, 'r') as file:
        config_dict = yaml.safe_load(file)

    config_dict['engine'] = Engine(**config_dict['engine'])
    config_dict['corpus'] = Corpus(**config_dict['corpus'])
    config_dict['oracle'] = OracleParams(**config_dict.get('oracle', {}))
    config_dict['output'] = Output(**config_dict.get('output', {}))

    config = Config(**config_dict)
    return config
