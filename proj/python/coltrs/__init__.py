from ._core import (
    CodeSpec,
    Field,
    Matrix,
    certify,
    certify_matrix,
    family_construct,
    criterion_mds,
    det,
    dual_oracle,
    encode,
    erasure_decode,
    eval_points,
    search_spec,
    gen_rs,
    generator,
    make_spec,
    mat_mul,
    matrix_from_csv,
    matrix_to_csv,
    min_distance,
    non_grs_certificate,
    nullspace,
    oracle_mds,
    parity_closed_form,
    rank,
    reference_example,
    reference_spec_canonical,
    schur_square,
    spec_from_json,
    spec_to_json,
    subgroup_elements,
    transpose,
)

__all__ = [
    "CodeSpec",
    "Field",
    "Matrix",
    "certify",
    "certify_matrix",
    "family_construct",
    "criterion_mds",
    "det",
    "dual_oracle",
    "encode",
    "erasure_decode",
    "eval_points",
    "search_spec",
    "gen_rs",
    "generator",
    "make_spec",
    "mat_mul",
    "matrix_from_csv",
    "matrix_to_csv",
    "min_distance",
    "non_grs_certificate",
    "nullspace",
    "oracle_mds",
    "parity_closed_form",
    "rank",
    "reference_example",
    "reference_spec_canonical",
    "schur_square",
    "spec_from_json",
    "spec_to_json",
    "subgroup_elements",
    "transpose",
]
