#pragma once

#include "etaq/arith.hpp"
#include "etaq/congruence.hpp"
#include "etaq/hauptmodul.hpp"
#include "etaq/hecke.hpp"
#include "etaq/poly.hpp"
#include "etaq/qforms.hpp"
#include "etaq/series.hpp"
