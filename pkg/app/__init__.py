# Graph Discord Toolkit Application Package
