#pragma once

#include "bchkit/alphabet.hpp"
#include "bchkit/bch.hpp"
#include "bchkit/io.hpp"
#include "bchkit/lie.hpp"
#include "bchkit/ncpoly.hpp"
#include "bchkit/random.hpp"
#include "bchkit/rational.hpp"
#include "bchkit/series.hpp"
#include "bchkit/verify.hpp"
