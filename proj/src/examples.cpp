#include "coltrs/examples.hpp"

#include <sstream>
#include <stdexcept>

#include "coltrs/io.hpp"

namespace coltrs {

namespace {

// Matrices below are stored in the CSV wire format so the golden data and
// the serializer cannot drift apart.

constexpr const char* kRefG1 = R"csv(GF(29)/0;1/2,7,16
1,1,1,1,1,1,1,1,1,1,1,1,1,15,9,0
3,4,6,8,9,10,11,13,15,16,22,24,26,23,10,0
9,16,7,6,23,13,5,24,22,24,20,25,9,18,14,0
27,6,13,19,4,14,26,22,11,7,5,20,2,5,6,0
23,24,20,7,7,24,25,25,20,25,23,16,23,4,11,0
11,9,4,27,5,8,14,6,10,23,13,7,18,4,24,0
4,7,24,13,16,22,9,20,5,20,25,23,4,1,25,1
)csv";

constexpr const char* kRefH1 = R"csv(GF(29)/0;1/2,9,16
16,24,15,24,18,12,8,28,0,0,0,0,0,0,0,0
2,4,9,15,25,15,18,0,28,0,0,0,0,0,0,0
11,15,16,27,21,5,22,0,0,28,0,0,0,0,0,0
4,26,26,2,12,21,26,0,0,0,28,0,0,0,0,0
17,3,18,19,11,9,11,0,0,0,0,28,0,0,0,0
19,5,21,17,5,9,12,0,0,0,0,0,28,0,0,0
17,15,8,6,8,1,18,0,0,0,0,0,0,28,0,0
2,17,23,22,7,20,5,0,0,0,0,0,0,0,28,0
24,15,23,18,5,17,14,0,0,0,0,0,0,0,0,28
)csv";

constexpr const char* kRefG2 = R"csv(GF(3^3)/1;2;0;1/0;1;0,7,15
1,1,1,1,1,1,1,1,1,1,1,1,w^21,w^15,0
0,1,w^5,w^22,w^15,w^25,w^10,w^8,w^19,w^3,w^13,w^18,w^18,w^9,0
0,1,w^10,w^18,w^4,w^24,w^20,w^16,w^12,w^6,1,w^10,w^20,w^10,0
0,1,w^15,w^14,w^19,w^23,w^4,w^24,w^5,w^9,w^13,w^2,w^11,1,0
0,1,w^20,w^10,w^8,w^22,w^14,w^6,w^24,w^12,1,w^20,w^9,w^21,0
0,1,w^25,w^6,w^23,w^21,w^24,w^14,w^17,w^15,w^13,w^12,w^23,w^4,0
0,1,w^4,w^2,w^12,w^20,w^8,w^22,w^10,w^18,1,w^4,w^3,w,1
)csv";

// The 14-column display drops the point-w^18 column from the full matrix.
constexpr const char* kRefG2Display = R"csv(GF(3^3)/1;2;0;1/0;1;0,7,14
1,1,1,1,1,1,1,1,1,1,1,w^21,w^15,0
0,1,w^5,w^22,w^15,w^25,w^10,w^8,w^19,w^3,w^13,w^18,w^9,0
0,1,w^10,w^18,w^4,w^24,w^20,w^16,w^12,w^6,1,w^20,w^10,0
0,1,w^15,w^14,w^19,w^23,w^4,w^24,w^5,w^9,w^13,w^11,1,0
0,1,w^20,w^10,w^8,w^22,w^14,w^6,w^24,w^12,1,w^9,w^21,0
0,1,w^25,w^6,w^23,w^21,w^24,w^14,w^17,w^15,w^13,w^23,w^4,0
0,1,w^4,w^2,w^12,w^20,w^8,w^22,w^10,w^18,1,w^3,w,1
)csv";

constexpr const char* kRefH2 = R"csv(GF(3^3)/1;2;0;1/0;1;0,8,15
w^25,w^2,w^24,w^15,w^21,w^25,w^17,w^13,0,0,0,0,0,0,0
w^12,w,w^9,w^15,w^10,w^7,w^11,0,w^13,0,0,0,0,0,0
w^25,w^13,w^5,w^13,w^18,w^14,w^11,0,0,w^13,0,0,0,0,0
w^6,w^13,w^20,w^17,w^8,w^16,w^17,0,0,0,w^13,0,0,0,0
1,w^8,w^18,w^5,w^21,w^13,1,0,0,0,0,w^13,0,0,0
w^21,w^8,w^17,w^16,w^8,w^3,w^22,0,0,0,0,0,w^13,0,0
w^22,w^7,w^6,w^6,w^6,w^21,w^16,0,0,0,0,0,0,w^13,0
w,w^21,w^6,1,w^2,w^19,w^18,0,0,0,0,0,0,0,w^13
)csv";

constexpr const char* kRefG3 = R"csv(GF(2^6)/1;1;0;1;1;0;1/0;1;0;0;0;0,5,13
1,1,1,1,1,1,1,1,1,1,w^3,w^58,0
w^25,w^29,w^7,w^13,w,w^23,w^26,w^40,w^46,w^32,w^51,w^55,0
w^50,w^58,w^14,w^26,w^2,w^46,w^52,w^17,w^29,w,w^24,w^18,0
w^12,w^24,w^21,w^39,w^3,w^6,w^15,w^57,w^12,w^33,w^52,w^55,0
w^37,w^53,w^28,w^52,w^4,w^29,w^41,w^34,w^58,w^2,w^60,w^3,1
)csv";

constexpr const char* kRefH3 = R"csv(GF(2^6)/1;1;0;1;1;0;1/0;1;0;0;0;0,8,13
w^25,w^40,w^4,w^11,w^60,1,0,0,0,0,0,0,0
w^4,w^38,w^21,w^56,w^36,0,1,0,0,0,0,0,0
w^35,w^34,w^40,w^59,w^23,0,0,1,0,0,0,0,0
w^15,w^6,w^49,w^18,w^55,0,0,0,1,0,0,0,0
1,w^46,w^22,w^22,w^46,0,0,0,0,1,0,0,0
w^30,w^4,w^25,w^4,w^15,0,0,0,0,0,1,0,0
w^22,w^40,w^57,w^23,w^61,0,0,0,0,0,0,1,0
w^24,w^16,w^15,w^11,w^34,0,0,0,0,0,0,0,1
)csv";

Matrix parse_golden(const char* text) {
    return matrix_from_csv(text);
}

FieldPtr reference_field(int id) {
    switch (id) {
        case 1: return Field::make(29, 1);
        case 2: return Field::make(3, 3, {1, 2, 0, 1});
        case 3: return Field::make(2, 6, {1, 1, 0, 1, 1, 0, 1});
        default: throw std::invalid_argument("reference example id must be 1, 2 or 3");
    }
}

FieldPtr canonical_field(int id) {
    switch (id) {
        case 1: return Field::make(29, 1);
        case 2: return Field::make(3, 3);
        case 3: return Field::make(2, 6);
        default: throw std::invalid_argument("reference example id must be 1, 2 or 3");
    }
}

CodeSpec build_spec(int id, const FieldPtr& field) {
    const Field& F = *field;
    switch (id) {
        case 1:
            return make_spec(field, 7, 12, 7, 14,
                             {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26},
                             {15, 21}, true, Variant::OddSquares);
        case 2:
            return make_spec(field, 7, F.w_pow(7), F.w_pow(11), 13,
                             {22, 12, 2, 24, 14, 4, 16, 6, 18, 8, 20, 10},
                             {F.w_pow(15), F.w_pow(21)}, true, Variant::OddSquares);
        case 3:
            return make_spec(field, 5, F.w_pow(10), F.w_pow(21), 21,
                             {51, 30, 60, 3, 33, 6, 36, 9, 39, 12},
                             {F.w_pow(13), F.w_pow(25)}, true, Variant::EvenCubics);
        default:
            throw std::invalid_argument("reference example id must be 1, 2 or 3");
    }
}

}  // namespace

ReferenceExample reference_example(int id) {
    ReferenceExample ex;
    ex.id = id;
    ex.spec = build_spec(id, reference_field(id));
    switch (id) {
        case 1:
            ex.G = parse_golden(kRefG1);
            ex.H = parse_golden(kRefH1);
            ex.d = 10;
            ex.schur_dim = 14;
            ex.schur_d = 2;
            break;
        case 2:
            ex.G = parse_golden(kRefG2);
            ex.H = parse_golden(kRefH2);
            ex.G_display = parse_golden(kRefG2Display);
            ex.d = 9;
            ex.schur_dim = 14;
            ex.schur_d = 1;
            break;
        case 3:
            ex.G = parse_golden(kRefG3);
            ex.H = parse_golden(kRefH3);
            ex.d = 9;
            ex.schur_dim = 10;
            ex.schur_d = 2;
            break;
        default:
            throw std::invalid_argument("reference example id must be 1, 2 or 3");
    }
    return ex;
}

CodeSpec reference_spec_canonical(int id) {
    return build_spec(id, canonical_field(id));
}

std::vector<std::uint32_t> reference_modulus(int id) {
    return reference_field(id)->modulus();
}

}  // namespace coltrs
