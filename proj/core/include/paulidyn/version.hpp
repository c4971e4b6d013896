#pragma once

#define PAULIDYN_VERSION "0.1.0"
