#pragma once
// gaplab.hpp - umbrella header for the whole library.

#include "gaplab/bigarith.hpp"
#include "gaplab/effective.hpp"
#include "gaplab/reduction.hpp"
#include "gaplab/reports.hpp"
#include "gaplab/search.hpp"
#include "gaplab/serialize.hpp"
#include "gaplab/theorem1.hpp"
