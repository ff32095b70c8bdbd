"""JSON persistence of fitted models."""
import json

from .classifiers import DtModel, LrModel, NbcModel, SvmModel
from .errors import ContractError
from .hmm import HmmModel

FORMAT_VERSION = 1

model_types = {
    'nbc': NbcModel,
    'dt': DtModel,
    'svm': SvmModel,
    'lr': LrModel,
    'hmm': HmmModel,
}


def model_to_json(model) -> str:
    values = model.to_dict()
    values['format_version'] = FORMAT_VERSION
    return json.dumps(values, indent=4)


def model_from_json(text: str):
    values = json.loads(text)
    version = values.pop('format_version', None)
    if version != FORMAT_VERSION:
        raise ContractError(f'Unsupported model format version {version!r}.')
    kind = values.get('model')
    if kind not in model_types:
        raise ContractError(f'Unknown model type {kind!r}.')
    return model_types[kind].from_dict(values)


def save_model(model, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(model_to_json(model))
        f.write('\n')


def load_model(path):
    with open(path, 'r', encoding='utf-8') as f:
        return model_from_json(f.read())
