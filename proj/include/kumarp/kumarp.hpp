#pragma once

#include "kumarp/bigint.hpp"
#include "kumarp/cartan.hpp"
#include "kumarp/criteria.hpp"
#include "kumarp/eqmult.hpp"
#include "kumarp/polyfrac.hpp"
#include "kumarp/records.hpp"
#include "kumarp/weyl.hpp"
#include "kumarp/zoo.hpp"
