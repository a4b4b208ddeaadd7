from django import forms
from django.core.exceptions import ValidationError

from .construction import EXPORT_FORMATS
from .modular import MIN_MODULUS, validate_pair

ENUMERATE_MAX_N = 10000
AUDIT_MAX_N = 200


class PairForm(forms.Form):
    """An admissible (n, a); cleaned_data['pair'] holds the AdmissiblePair"""
    n = forms.IntegerField(min_value=MIN_MODULUS)
    a = forms.IntegerField(min_value=1)

    def clean(self):
        cleaned_data = super().clean()
        n = cleaned_data.get('n')
        a = cleaned_data.get('a')
        if n is not None and a is not None:
            cleaned_data['pair'] = validate_pair(n, a)
        return cleaned_data


class ExportForm(PairForm):
    format = forms.ChoiceField(choices=[(f, f) for f in EXPORT_FORMATS])


class RangeForm(forms.Form):
    """Upper end of a range of moduli, bounded per command"""
    max_n = forms.IntegerField(min_value=1)

    def __init__(self, *args, limit=ENUMERATE_MAX_N, **kwargs):
        super().__init__(*args, **kwargs)
        self.limit = limit

    def clean_max_n(self):
        max_n = self.cleaned_data['max_n']
        if max_n > self.limit:
            raise ValidationError(f'max_n must be at most {self.limit} (got {max_n})')
        return max_n


def error_message(form):
    """Flatten form errors into one line for CommandError"""
    parts = []
    for field, errors in form.errors.items():
        prefix = '' if field == '__all__' else f'{field}: '
        parts.extend(prefix + str(e) for e in errors)
    return '; '.join(parts)
