#pragma once

#include "trispec/bessel.hpp"
#include "trispec/certificate/certify.hpp"
#include "trispec/certificate/coefficients.hpp"
#include "trispec/certificate/replay.hpp"
#include "trispec/certificate/report.hpp"
#include "trispec/certificate/subdivision.hpp"
#include "trispec/certificate/transcription.hpp"
#include "trispec/error.hpp"
#include "trispec/fem/assemble.hpp"
#include "trispec/fem/eigensolver.hpp"
#include "trispec/fem/mesh.hpp"
#include "trispec/geometry.hpp"
#include "trispec/lambda1_bounds.hpp"
#include "trispec/lambda2_bounds.hpp"
#include "trispec/rigor/constants.hpp"
#include "trispec/rigor/expr.hpp"
#include "trispec/rigor/interval.hpp"
#include "trispec/rigor/poly.hpp"
#include "trispec/rigor/sign.hpp"
#include "trispec/sweep.hpp"
