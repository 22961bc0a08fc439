#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "ccr/tensor.hpp"

namespace ccr::test {

inline void check_near(double got, double want, double tol) {
    INFO("got " << got << ", want " << want << ", tol " << tol);
    CHECK(std::abs(got - want) <= tol);
}

inline void check_near(Complex got, Complex want, double tol) {
    INFO("got " << got << ", want " << want << ", tol " << tol);
    CHECK(std::abs(got - want) <= tol);
}

inline void check_matrix(const ComplexMatrix& got, const ComplexMatrix& want, double tol) {
    REQUIRE(got.rows() == want.rows());
    REQUIRE(got.cols() == want.cols());
    INFO("max deviation " << max_abs_diff(got, want));
    CHECK(max_abs_diff(got, want) <= tol);
}

template <typename Fn>
void check_throws_kind(Fn&& fn, ErrorKind kind) {
    try {
        fn();
        FAIL("expected ccr::Error of kind " << to_string(kind));
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

}  // namespace ccr::test
