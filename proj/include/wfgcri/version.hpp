#pragma once

#define WFGCRI_VERSION "0.1.0"
