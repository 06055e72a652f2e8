# If there are any initializations or imports, they go here.
