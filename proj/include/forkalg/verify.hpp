#pragma once

#include "forkalg/functors.hpp"
#include "forkalg/json_io.hpp"

namespace forkalg::verify {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> messages;

    void merge(const std::string& what, const CheckReport& r) {
        if (!r.pass) {
            pass = false;
            messages.push_back(what + ": " + r.summary());
        }
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            messages.push_back(what);
        }
    }
};

// Ring axioms on random polynomials, divided-difference identities and the
// complete-symmetric recursions, all exact.
SuiteResult polyring(int n);

// Quotient dimensions over the admissible sequences, normal-form laws, the
// hom bases and their duality.
SuiteResult quotient(int n);

// Weight encodings, reduced words, Bruhat order, canonical bases, the closed
// formula, counting corollaries and the graded dimension identities.
SuiteResult hecke(int n);

// The monomial/diagram bijection per weight pair, the illicitness criteria,
// degree bounds, and the corner projection homomorphism between adjacent
// algebras.
SuiteResult psi(int n);

// Algebra laws for all blocks of size n: idempotents, star, grading,
// triangularity, associativity.
SuiteResult algebra(int n);

SuiteResult cellular(int n);
SuiteResult stratified(int n);
SuiteResult duality(int n);
SuiteResult functors(int n);

std::vector<SuiteResult> run(const std::string& suite, int n);

// Shared cache so acceptance runs and suites build each block once.
const DiagramAlgebra& cached_algebra(int n, int k, bool build_table_parallel = true);

}  // namespace forkalg::verify
