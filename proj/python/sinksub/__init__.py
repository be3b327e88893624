# Copyright 2026 The sinksub Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Grundy sequences of sink and wall subtraction games."""

from ._core import (
    AdditiveParams,
    AuditFailure,
    HorizonExhausted,
    PeriodInfo,
    UnsupportedDelta,
    WrongCase,
    audit_tables,
    block_word,
    candidate_word,
    detect_period,
    duality_report,
    grundy_sequence,
    mex,
    period_formula,
    reduce_params,
    render_family,
    rotation_equivalent,
    run_cli,
    scan_csv,
    verify_mex_consistency,
)

__all__ = [
    "AdditiveParams",
    "AuditFailure",
    "HorizonExhausted",
    "PeriodInfo",
    "UnsupportedDelta",
    "WrongCase",
    "audit_tables",
    "block_word",
    "candidate_word",
    "detect_period",
    "duality_report",
    "grundy_sequence",
    "mex",
    "period_formula",
    "reduce_params",
    "render_family",
    "rotation_equivalent",
    "run_cli",
    "scan_csv",
    "verify_mex_consistency",
]
