#pragma once

#include "ecc_spectra/errors.hpp"
#include "ecc_spectra/sequence.hpp"
#include "ecc_spectra/matrix.hpp"
#include "ecc_spectra/graph.hpp"
#include "ecc_spectra/ecc_matrix.hpp"
#include "ecc_spectra/linalg/eigen_sym.hpp"
#include "ecc_spectra/linalg/bareiss.hpp"
#include "ecc_spectra/linalg/inertia.hpp"
#include "ecc_spectra/quotient.hpp"
#include "ecc_spectra/theorems.hpp"
#include "ecc_spectra/format.hpp"
#include "ecc_spectra/reference_table.hpp"
#include "ecc_spectra/report.hpp"
#include "ecc_spectra/verify.hpp"
