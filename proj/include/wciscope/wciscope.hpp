#pragma once

#include "wciscope/aut.hpp"
#include "wciscope/fields.hpp"
#include "wciscope/json_io.hpp"
#include "wciscope/lab.hpp"
#include "wciscope/monomial.hpp"
#include "wciscope/polynomial.hpp"
#include "wciscope/qs.hpp"
#include "wciscope/search.hpp"
#include "wciscope/wci.hpp"
#include "wciscope/wps.hpp"
