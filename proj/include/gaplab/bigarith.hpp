#pragma once
// bigarith.hpp - umbrella header for the arithmetic layer.

#include "gaplab/bigint.hpp"
#include "gaplab/certified.hpp"
#include "gaplab/errors.hpp"
#include "gaplab/factorization.hpp"
#include "gaplab/logreal.hpp"
#include "gaplab/normal_form.hpp"
