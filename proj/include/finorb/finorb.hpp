#pragma once

#include <finorb/criterion.hpp>
#include <finorb/feasibility.hpp>
#include <finorb/gaussian.hpp>
#include <finorb/geometry.hpp>
#include <finorb/io.hpp>
#include <finorb/lattice.hpp>
#include <finorb/oracle.hpp>
#include <finorb/rational.hpp>
