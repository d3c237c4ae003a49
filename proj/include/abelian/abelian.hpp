#pragma once

#include "abelian/bigint.hpp"
#include "abelian/construction.hpp"
#include "abelian/error.hpp"
#include "abelian/factorize.hpp"
#include "abelian/group_spec.hpp"
#include "abelian/groups.hpp"
#include "abelian/modular.hpp"
#include "abelian/primality.hpp"
#include "abelian/progression.hpp"
#include "abelian/residue_structure.hpp"
#include "abelian/search.hpp"
