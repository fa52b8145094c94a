#pragma once

#include "checked.hpp"
#include "dp.hpp"
#include "enumeration.hpp"
#include "families.hpp"
#include "tree.hpp"
#include "treegen.hpp"
#include "verifier.hpp"
