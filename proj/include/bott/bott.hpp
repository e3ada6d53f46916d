#pragma once

#include "bott/base_change.hpp"
#include "bott/bott_matrix.hpp"
#include "bott/cohom_class.hpp"
#include "bott/degree_two.hpp"
#include "bott/expression.hpp"
#include "bott/io.hpp"
#include "bott/iso_engine.hpp"
#include "bott/monomial.hpp"
#include "bott/oracle.hpp"
#include "bott/rigidity.hpp"
#include "bott/ring.hpp"
#include "bott/scalar.hpp"
#include "bott/scan.hpp"
