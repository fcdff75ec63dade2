#pragma once

#include "relsym/arith.hpp"
#include "relsym/characters.hpp"
#include "relsym/denumerant.hpp"
#include "relsym/dimension.hpp"
#include "relsym/partition.hpp"
#include "relsym/symmetrizer.hpp"
#include "relsym/tableaux.hpp"
