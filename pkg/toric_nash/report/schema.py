"""JSON Schema of the machine-readable report."""
import jsonschema

from toric_nash.helpers.errors import InvariantViolation

__all__ = ['REPORT_SCHEMA', 'validate_report']

_VECTOR = {'type': 'array', 'items': {'type': 'integer'}}
_VECTORS = {'type': 'array', 'items': _VECTOR}
_RATIONAL = {'oneOf': [{'type': 'integer'}, {'type': 'string', 'pattern': r'^-?\d+/\d+$'}]}
_MAYBE_BOOL = {'type': ['boolean', 'null']}

REPORT_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'title': 'toric_nash report',
    'type': 'object',
    'required': ['name', 'cone', 'regularity', 'singular_faces'],
    'additionalProperties': False,
    'properties': {
        'name': {'type': 'string'},
        'cone': {
            'type': 'object',
            'required': ['lattice_rank', 'rays', 'extreme_rays', 'dim', 'facets'],
            'properties': {
                'lattice_rank': {'type': 'integer', 'minimum': 1},
                'rays': _VECTORS,
                'extreme_rays': _VECTORS,
                'dim': {'type': 'integer', 'minimum': 0},
                'facets': _VECTORS,
                'equations': _VECTORS,
            },
        },
        'regularity': {
            'type': 'object',
            'required': ['is_regular', 'is_simplicial', 'is_terminal', 'is_canonical', 'multiplicity'],
            'properties': {
                'is_regular': {'type': 'boolean'},
                'is_simplicial': {'type': 'boolean'},
                'is_terminal': _MAYBE_BOOL,
                'is_canonical': _MAYBE_BOOL,
                'multiplicity': {'type': ['integer', 'null']},
            },
        },
        'singular_faces': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['rays', 'dim', 'multiplicity'],
                'properties': {
                    'rays': _VECTOR,
                    'dim': {'type': 'integer'},
                    'multiplicity': {'type': ['integer', 'null']},
                },
            },
        },
        'min_set': _VECTORS,
        'ter_set': _VECTORS,
        'fan': {
            'type': 'object',
            'required': ['rays', 'max_cones', 'walls', 'exceptional_rays', 'all_terminal', 'all_nef'],
            'properties': {
                'rays': _VECTORS,
                'max_cones': _VECTORS,
                'walls': {
                    'type': 'array',
                    'items': {
                        'type': 'object',
                        'required': ['wall', 'cones', 'bend'],
                        'properties': {'wall': _VECTORS, 'cones': _VECTOR, 'bend': _RATIONAL},
                    },
                },
                'exceptional_rays': _VECTORS,
                'exceptional_curves': {'type': 'integer'},
                'all_terminal': {'type': 'boolean'},
                'all_nef': {'type': 'boolean'},
                'is_q_factorial': {'type': 'boolean'},
                'bend_convention': {'type': 'string'},
            },
        },
        'hirzebruch_jung': {
            'type': 'object',
            'required': ['boundary', 'continued_fraction'],
            'properties': {'boundary': _VECTORS, 'continued_fraction': _VECTOR},
        },
        'verification': {
            'type': 'object',
            'required': ['passed', 'failures'],
            'properties': {
                'passed': {'type': 'boolean'},
                'failures': {
                    'type': 'array',
                    'items': {
                        'type': 'object',
                        'required': ['check', 'detail'],
                        'properties': {'check': {'type': 'string'}, 'detail': {'type': 'string'}},
                    },
                },
                'reverse_order_agrees': _MAYBE_BOOL,
            },
        },
        'timings': {'type': 'object', 'additionalProperties': {'type': 'number'}},
    },
}


def validate_report(doc):
    """Raises InvariantViolation when a report does not match REPORT_SCHEMA."""
    try:
        jsonschema.validate(instance=doc, schema=REPORT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise InvariantViolation('report does not match its schema: {}'.format(e.message))
    return doc
