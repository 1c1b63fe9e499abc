# symcoef/forms.py
"""コマンドライン引数（文字列）の検証。失敗は forms.ValidationError。"""
from django import forms

from .exceptions import ArgumentError
from .partitions import contains, parse_partition
from .suites import SCANS, SUITES


# ===== 分割 =====
class PartitionField(forms.Field):
    """'3,2,1'、'[3,2,1]'、'4^2,1^3'、'[]' を受け付ける"""

    def to_python(self, value):
        if value in self.empty_values:
            return None
        try:
            return parse_partition(str(value))
        except ArgumentError as exc:
            raise forms.ValidationError(f'分割として読めません: {value!r} ({exc})', code='invalid')


def _choices(names):
    return [(name, name) for name in sorted(names)]


# ===== 単発の計算 =====
class DimForm(forms.Form):
    lam = PartitionField()


class SkewForm(forms.Form):
    outer = PartitionField()
    inner = PartitionField(required=False)

    def clean(self):
        cleaned = super().clean()
        outer, inner = cleaned.get('outer'), cleaned.get('inner')
        if outer is not None and inner:
            if not contains(inner, outer):
                raise forms.ValidationError(f'{inner} は {outer} に含まれていません。')
        return cleaned


class TripleForm(forms.Form):
    lam = PartitionField()
    mu = PartitionField(required=False)
    nu = PartitionField(required=False)
    # lr では |μ|+|ν| = |λ|、kron では 3 つとも同じ大きさ
    mode = forms.ChoiceField(choices=[('lr', 'lr'), ('kron', 'kron')])

    def clean(self):
        cleaned = super().clean()
        lam, mu, nu = cleaned.get('lam'), cleaned.get('mu'), cleaned.get('nu')
        if lam is None:
            return cleaned
        mu = mu if mu is not None else parse_partition('[]')
        nu = nu if nu is not None else parse_partition('[]')
        cleaned['mu'], cleaned['nu'] = mu, nu
        if cleaned.get('mode') == 'lr' and mu.size + nu.size != lam.size:
            raise forms.ValidationError(f'|μ|+|ν| が |λ| と一致しません: {mu.size}+{nu.size} != {lam.size}')
        if cleaned.get('mode') == 'kron' and not lam.size == mu.size == nu.size:
            raise forms.ValidationError('3 つの分割の大きさが揃っていません。')
        return cleaned


# ===== 表・検証・走査 =====
class TableForm(forms.Form):
    table = forms.ChoiceField(choices=_choices(['cnk', 'cn', 'dn']))
    n_max = forms.IntegerField(min_value=0)


class VerifyForm(forms.Form):
    suite = forms.ChoiceField(choices=_choices(SUITES))
    n_max = forms.IntegerField(min_value=0)


class ScanForm(forms.Form):
    name = forms.ChoiceField(choices=_choices(SCANS))
    n = forms.IntegerField(min_value=1)


class BoundsForm(forms.Form):
    target = forms.ChoiceField(choices=_choices(['lr', 'kron', 'skew']))
    n = forms.IntegerField(min_value=0)
    k = forms.IntegerField(min_value=0, required=False)

    def clean(self):
        cleaned = super().clean()
        n, k, target = cleaned.get('n'), cleaned.get('k'), cleaned.get('target')
        if target in ('lr', 'skew'):
            if k is None:
                raise forms.ValidationError(f'{target} には k が必要です。')
            if n is not None and k > n:
                raise forms.ValidationError(f'k は n 以下にしてください: k={k}, n={n}')
        if target == 'kron' and n is not None and n < 1:
            raise forms.ValidationError('n は 1 以上にしてください。')
        return cleaned


class ShapeForm(forms.Form):
    what = forms.ChoiceField(choices=_choices(['curve', 'upsilon', 'constants']))
    n = forms.IntegerField(min_value=1, required=False)
    points = forms.IntegerField(min_value=2, required=False)
    grid = forms.IntegerField(min_value=2, required=False)
