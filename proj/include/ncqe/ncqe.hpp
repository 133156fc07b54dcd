#pragma once

#include "ncqe/carnot.hpp"
#include "ncqe/core.hpp"
#include "ncqe/cycle_result.hpp"
#include "ncqe/errors.hpp"
#include "ncqe/isoenergetic.hpp"
#include "ncqe/isomagnetic.hpp"
#include "ncqe/oracle.hpp"
#include "ncqe/sweep.hpp"
