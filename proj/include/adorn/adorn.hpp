#pragma once

#include "adorn/alexander.hpp"
#include "adorn/catalog.hpp"
#include "adorn/coset_table.hpp"
#include "adorn/engine.hpp"
#include "adorn/errors.hpp"
#include "adorn/finite_group.hpp"
#include "adorn/ints.hpp"
#include "adorn/laurent.hpp"
#include "adorn/mod_matrix.hpp"
#include "adorn/permutation.hpp"
#include "adorn/presentation.hpp"
#include "adorn/rewriting.hpp"
#include "adorn/smith.hpp"
#include "adorn/tietze.hpp"
#include "adorn/verdict.hpp"
#include "adorn/word.hpp"
