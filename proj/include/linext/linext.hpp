#pragma once

#include "linext/analysis.hpp"
#include "linext/big_count.hpp"
#include "linext/bounds.hpp"
#include "linext/brute_force.hpp"
#include "linext/certify.hpp"
#include "linext/errors.hpp"
#include "linext/generator.hpp"
#include "linext/io.hpp"
#include "linext/jump.hpp"
#include "linext/le_count.hpp"
#include "linext/matching.hpp"
#include "linext/poset.hpp"
#include "linext/transform.hpp"
#include "linext/vertex_set.hpp"
