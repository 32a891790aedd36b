#pragma once

#include "zeroloc/error.hpp"
#include "zeroloc/grommer.hpp"
#include "zeroloc/locus.hpp"
#include "zeroloc/model.hpp"
#include "zeroloc/qtheta.hpp"
#include "zeroloc/roots.hpp"
#include "zeroloc/series.hpp"
#include "zeroloc/verdict.hpp"
