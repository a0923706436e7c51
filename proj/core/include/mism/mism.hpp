#pragma once

#include "mism/binary_mask.hpp"
#include "mism/confusion.hpp"
#include "mism/error.hpp"
#include "mism/harness.hpp"
#include "mism/mask_io.hpp"
#include "mism/metrics.hpp"
#include "mism/report.hpp"
#include "mism/sweep.hpp"
