#pragma once

#include "quandlekit/alexander.hpp"
#include "quandlekit/enumerate.hpp"
#include "quandlekit/group.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/obstruction.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/types.hpp"
