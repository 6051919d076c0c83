#pragma once

#include "superpat/coverage.hpp"
#include "superpat/error.hpp"
#include "superpat/exact_series.hpp"
#include "superpat/patterns.hpp"
#include "superpat/superpatterns.hpp"
#include "superpat/waiting_time.hpp"
#include "superpat/word.hpp"
#include "superpat/oeis.hpp"
