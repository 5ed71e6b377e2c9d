#ifndef TPSHAPE_TPSHAPE_HPP
#define TPSHAPE_TPSHAPE_HPP

// Core analysis headers. io.hpp and report.hpp additionally need
// nlohmann/json and are included separately.

#include "tpshape/errors.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"
#include "tpshape/seqshape.hpp"
#include "tpshape/decompose.hpp"
#include "tpshape/kernel.hpp"
#include "tpshape/tpcheck.hpp"
#include "tpshape/transform.hpp"
#include "tpshape/dompoly.hpp"
#include "tpshape/oracle.hpp"

#endif
