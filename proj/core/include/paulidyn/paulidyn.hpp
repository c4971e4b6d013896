#pragma once

#include "paulidyn/channel.hpp"
#include "paulidyn/collision.hpp"
#include "paulidyn/divisibility.hpp"
#include "paulidyn/errors.hpp"
#include "paulidyn/families.hpp"
#include "paulidyn/linalg.hpp"
#include "paulidyn/props.hpp"
#include "paulidyn/synthesis.hpp"
#include "paulidyn/trajectory.hpp"
#include "paulidyn/triple.hpp"
#include "paulidyn/version.hpp"
