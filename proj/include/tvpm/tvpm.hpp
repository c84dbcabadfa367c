#ifndef TVPM_TVPM_HPP
#define TVPM_TVPM_HPP

#include <tvpm/affine_system.hpp>
#include <tvpm/colored.hpp>
#include <tvpm/colorful_caratheodory.hpp>
#include <tvpm/config.hpp>
#include <tvpm/instance_gen.hpp>
#include <tvpm/linalg.hpp>
#include <tvpm/lp.hpp>
#include <tvpm/min_norm.hpp>
#include <tvpm/partition_search.hpp>
#include <tvpm/rational.hpp>
#include <tvpm/sarkaria.hpp>

#endif  // TVPM_TVPM_HPP
