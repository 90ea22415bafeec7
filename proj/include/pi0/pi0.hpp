#pragma once

// Exact-arithmetic toolkit for comparing component groups of matrix-group
// images: charpoly-coefficient detectors built from tensor constructions,
// Frobenius statistics from elliptic curves, unipotent-envelope probes of
// finite matrix groups, and exhaustive point counts over F_ell.

#include "pi0/bigint.hpp"
#include "pi0/charpoint.hpp"
#include "pi0/classify.hpp"
#include "pi0/counting.hpp"
#include "pi0/csv.hpp"
#include "pi0/density.hpp"
#include "pi0/envelope.hpp"
#include "pi0/frobenius.hpp"
#include "pi0/groups.hpp"
#include "pi0/matrix.hpp"
#include "pi0/poly.hpp"
#include "pi0/prime_field.hpp"
#include "pi0/primes.hpp"
#include "pi0/report_io.hpp"
#include "pi0/resultant.hpp"
#include "pi0/tensor.hpp"
#include "pi0/weights.hpp"
