#pragma once

#include "sgr/semigroup.hpp"
#include "sgr/divisor_complex.hpp"
#include "sgr/betti.hpp"
#include "sgr/gluing.hpp"
#include "sgr/criteria.hpp"
#include "sgr/classify.hpp"
#include "sgr/search.hpp"
