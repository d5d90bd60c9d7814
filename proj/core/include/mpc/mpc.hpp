#pragma once

#include "mpc/analysis.hpp"
#include "mpc/code.hpp"
#include "mpc/codec.hpp"
#include "mpc/error.hpp"
#include "mpc/field.hpp"
#include "mpc/hashing.hpp"
#include "mpc/linalg.hpp"
#include "mpc/parallel.hpp"
#include "mpc/parent.hpp"
#include "mpc/source.hpp"
