#pragma once

#include "orbital/counting.hpp"
#include "orbital/errors.hpp"
#include "orbital/graph.hpp"
#include "orbital/label_map.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/polynomial.hpp"
#include "orbital/poset.hpp"
