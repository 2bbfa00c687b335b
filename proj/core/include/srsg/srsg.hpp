#pragma once

#include "srsg/dynamics.hpp"
#include "srsg/exact.hpp"
#include "srsg/game.hpp"
#include "srsg/generators.hpp"
#include "srsg/greedy.hpp"
#include "srsg/metrics.hpp"
#include "srsg/prng.hpp"
#include "srsg/rational.hpp"
#include "srsg/reductions.hpp"
#include "srsg/text_format.hpp"
#include "srsg/twosat.hpp"
